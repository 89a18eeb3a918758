# Init file for commands module
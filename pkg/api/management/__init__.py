# Init file for management module
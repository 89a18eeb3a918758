from django.apps import AppConfig


class ExpansionsConfig(AppConfig):
    name = 'expansions'
    verbose_name = 'Asymptotic expansions of the nanosphere resonance'

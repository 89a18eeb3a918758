from django.apps import AppConfig


class ResonancesConfig(AppConfig):
    name = 'resonances'
    verbose_name = 'Sphere resonances'

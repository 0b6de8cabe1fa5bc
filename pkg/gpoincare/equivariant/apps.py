from django.apps import AppConfig


class EquivariantConfig(AppConfig):
    name = 'equivariant'
    verbose_name = 'Equivariant Poincare series of plane curve singularities'

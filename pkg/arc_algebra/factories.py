import factory

from .models import CheckRun


class CheckRunFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = CheckRun

    kind = 'associativity'
    n = 4
    k = 2
    alpha = 1
    basis_filter = 'standard_only'
    passed = True
    witness = None
    elapsed_seconds = factory.Sequence(lambda i: 0.1 * (i + 1))

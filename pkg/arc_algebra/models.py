from django.db import models


class CheckRun(models.Model):
    """Результат исчерпывающей проверки свойств алгебры."""
    KIND_CHOICES = [
        ('associativity', 'Ассоциативность'),
        ('order', 'Независимость от порядка чашек'),
        ('nested', 'Совпадение с вложенной ТКТП'),
        ('degree', 'Аддитивность степени'),
        ('unit', 'Единица и идемпотенты'),
        ('oracle', 'Сравнение с прямым вычислением'),
        ('grading', 'Градуировка Hom'),
    ]
    BASIS_FILTER_CHOICES = [
        ('standard_only', 'Только стандартные веса'),
        ('all', 'Все веса'),
    ]

    kind = models.CharField(max_length=20, choices=KIND_CHOICES, verbose_name='Проверка')
    n = models.PositiveIntegerField(verbose_name='n')
    k = models.PositiveIntegerField(verbose_name='k')
    alpha = models.SmallIntegerField(null=True, blank=True, verbose_name='α')
    basis_filter = models.CharField(
        max_length=20, choices=BASIS_FILTER_CHOICES, default='standard_only', verbose_name='Базис'
    )
    passed = models.BooleanField(verbose_name='Пройдена')
    witness = models.JSONField(null=True, blank=True, verbose_name='Контрпример')
    elapsed_seconds = models.FloatField(default=0, verbose_name='Время, с')
    created_at = models.DateTimeField(auto_now_add=True, verbose_name='Дата запуска')

    class Meta:
        verbose_name = 'Запуск проверки'
        verbose_name_plural = 'Запуски проверок'
        ordering = ['-created_at']

    def __str__(self):
        status = 'PASS' if self.passed else 'FAIL'
        return f"{self.kind} ({self.n},{self.k}) α={self.alpha}: {status}"

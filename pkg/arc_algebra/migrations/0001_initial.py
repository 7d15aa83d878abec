# Generated by Django 4.2.24 on 2026-10-18 12:00

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CheckRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('kind', models.CharField(choices=[('associativity', 'Ассоциативность'), ('order', 'Независимость от порядка чашек'), ('nested', 'Совпадение с вложенной ТКТП'), ('degree', 'Аддитивность степени'), ('unit', 'Единица и идемпотенты'), ('oracle', 'Сравнение с прямым вычислением'), ('grading', 'Градуировка Hom')], max_length=20, verbose_name='Проверка')),
                ('n', models.PositiveIntegerField(verbose_name='n')),
                ('k', models.PositiveIntegerField(verbose_name='k')),
                ('alpha', models.SmallIntegerField(blank=True, null=True, verbose_name='α')),
                ('basis_filter', models.CharField(choices=[('standard_only', 'Только стандартные веса'), ('all', 'Все веса')], default='standard_only', max_length=20, verbose_name='Базис')),
                ('passed', models.BooleanField(verbose_name='Пройдена')),
                ('witness', models.JSONField(blank=True, null=True, verbose_name='Контрпример')),
                ('elapsed_seconds', models.FloatField(default=0, verbose_name='Время, с')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Дата запуска')),
            ],
            options={
                'verbose_name': 'Запуск проверки',
                'verbose_name_plural': 'Запуски проверок',
                'ordering': ['-created_at'],
            },
        ),
    ]

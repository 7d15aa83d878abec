from django.core.exceptions import ValidationError


class DiagramValidationError(ValidationError):
    """Некорректные входные данные: форма, вес, таблица или диаграмма"""

    def __init__(self, message, code='invalid', params=None, argument=None):
        super().__init__(message, code=code, params=params)
        self.argument = argument

    def __str__(self):
        text = '; '.join(self.messages)
        if self.argument:
            return f'{self.argument}: {text}'
        return text


class CompositionError(DiagramValidationError):
    """Цель левого множителя не совпадает с источником правого"""

    def __init__(self, message, argument=None):
        super().__init__(message, code='composition', argument=argument)


class DiagramInternalError(RuntimeError):
    """Нарушен внутренний инвариант вычисления"""

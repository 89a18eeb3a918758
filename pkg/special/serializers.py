import math

from rest_framework import serializers


class ComplexField(serializers.Field):
    """
    Complex scalar as ``{"re": ..., "im": ...}``; also accepts ``"1+2j"``
    style strings and plain numbers on input.
    """
    default_error_messages = {
        'invalid': 'Enter a complex number such as "3", "0.5-1j" or {{"re": 3, "im": 0}}.',
        'non_finite': 'Complex components must be finite.',
    }

    def to_representation(self, value):
        value = complex(value)
        return {'re': value.real, 'im': value.imag}

    def to_internal_value(self, data):
        try:
            if isinstance(data, dict):
                value = complex(float(data['re']), float(data.get('im', 0.0)))
            else:
                value = complex(str(data).replace(' ', ''))
        except (KeyError, TypeError, ValueError):
            self.fail('invalid')
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            self.fail('non_finite')
        return value

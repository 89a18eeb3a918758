from rest_framework import serializers

from special.serializers import ComplexField

from .series import MAX_TAYLOR_ORDER


class ExpansionTermSerializer(serializers.Serializer):
    power = serializers.IntegerField(read_only=True)
    value = ComplexField(read_only=True)
    stderr = serializers.FloatField(read_only=True)


class ExpansionSeriesSerializer(serializers.Serializer):
    label = serializers.CharField(read_only=True)
    truncation_order = serializers.IntegerField(read_only=True)
    terms = ExpansionTermSerializer(many=True, read_only=True)


class ExpandQuerySerializer(serializers.Serializer):
    """
    ``moments`` selects the moments feeding R1: closed forms and quadrature
    ('exact'), or Monte Carlo estimates whose errors propagate ('mc').
    """
    max_order = serializers.IntegerField(min_value=2, max_value=MAX_TAYLOR_ORDER, default=3)
    taylor_order = serializers.IntegerField(min_value=0, max_value=MAX_TAYLOR_ORDER, default=4)
    eta0 = serializers.FloatField(default=1.0)
    moments = serializers.ChoiceField(choices=['exact', 'mc'], default='exact')
    samples = serializers.IntegerField(min_value=1000, required=False)
    seed = serializers.IntegerField(min_value=0, required=False)

    def validate_eta0(self, value):
        if not value > 0:
            raise serializers.ValidationError("eta0 must be positive")
        return value

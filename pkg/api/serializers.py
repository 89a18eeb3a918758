from django.conf import settings
from rest_framework import serializers

from special.serializers import ComplexField


class FigureQuerySerializer(serializers.Serializer):
    h_min = serializers.FloatField(min_value=0.0, max_value=1.0, required=False)
    h_max = serializers.FloatField(min_value=0.0, max_value=1.0, required=False)
    steps = serializers.IntegerField(min_value=2, required=False)

    def validate_h_min(self, value):
        return self._open_unit_interval(value)

    def validate_h_max(self, value):
        return self._open_unit_interval(value)

    @staticmethod
    def _open_unit_interval(value):
        if not 0 < value < 1:
            raise serializers.ValidationError("h must lie strictly between 0 and 1")
        return value

    def validate(self, data):
        # a single bound is checked against the configured other one
        h_min = data.get('h_min', settings.RESONANCE['FIGURE_H_MIN'])
        h_max = data.get('h_max', settings.RESONANCE['FIGURE_H_MAX'])
        if not h_min < h_max:
            raise serializers.ValidationError(f"need h_min < h_max, got {h_min} and {h_max}")
        return data


class FigureRowSerializer(serializers.Serializer):
    h = serializers.FloatField(read_only=True)
    exact = ComplexField(read_only=True)
    r0 = ComplexField(read_only=True)
    r0r1 = ComplexField(read_only=True)
    r0r1r2 = ComplexField(read_only=True)


class VerifyQuerySerializer(serializers.Serializer):
    perturb_lambda0 = serializers.FloatField(default=1.0)
    samples = serializers.IntegerField(min_value=1000, required=False)

    def validate_perturb_lambda0(self, value):
        if not value > 0:
            raise serializers.ValidationError("the perturbation factor must be positive")
        return value


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField(read_only=True)
    criterion = serializers.IntegerField(read_only=True)
    passed = serializers.BooleanField(read_only=True)
    measured = serializers.FloatField(read_only=True)
    tolerance = serializers.FloatField(read_only=True)
    elapsed = serializers.FloatField(read_only=True)
    detail = serializers.CharField(read_only=True)


class VerificationReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField(read_only=True)
    perturb_lambda0 = serializers.FloatField(read_only=True)
    checks = CheckResultSerializer(many=True, read_only=True)

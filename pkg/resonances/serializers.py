from rest_framework import serializers

from special.serializers import ComplexField

from .models import CERTIFICATION_THRESHOLD, ModeSource


class ResonanceModeSerializer(serializers.Serializer):
    k = ComplexField(read_only=True)
    branch_m = serializers.IntegerField(read_only=True)
    interface_residual = serializers.FloatField(read_only=True)
    dispersion_residual = serializers.FloatField(read_only=True)
    source = serializers.ChoiceField(choices=ModeSource.choices, read_only=True)
    iterations = serializers.IntegerField(read_only=True)
    certified = serializers.SerializerMethodField()

    def get_fields(self):
        fields = super().get_fields()
        # `lambda` is a keyword, so the attribute is `lam`
        fields['lambda'] = ComplexField(source='lam', read_only=True)
        return fields

    def get_certified(self, mode):
        threshold = self.context.get('threshold', CERTIFICATION_THRESHOLD)
        values = mode if isinstance(mode, dict) else vars(mode)
        return values['interface_residual'] < threshold and values['dispersion_residual'] < threshold


class SolvedModeSerializer(ResonanceModeSerializer):
    """Newton mode together with its distance from the closed-form root of the same branch."""
    closed_form_delta = serializers.FloatField(read_only=True)


class ExactQuerySerializer(serializers.Serializer):
    """
    Parameters of one closed-form resonance: either a ball (r, eta) or a
    nanosphere (h, eta0), never both.
    """
    r = serializers.FloatField(required=False)
    eta = ComplexField(required=False)
    h = serializers.FloatField(required=False)
    eta0 = serializers.FloatField(required=False)
    m = serializers.IntegerField(min_value=0, default=0)
    allow_complex = serializers.BooleanField(default=False)

    def validate(self, data):
        ball = [name for name in ('r', 'eta') if data.get(name) is not None]
        nano = [name for name in ('h', 'eta0') if data.get(name) is not None]
        if ball and nano:
            raise serializers.ValidationError("Give either --r/--eta or --h/--eta0, not both")
        if len(ball) == 2:
            data['group'] = 'ball'
        elif len(nano) == 2:
            data['group'] = 'nano'
        else:
            raise serializers.ValidationError("Give both --r and --eta, or both --h and --eta0")
        return data


class SolveQuerySerializer(serializers.Serializer):
    r = serializers.FloatField()
    eta = ComplexField()
    m_max = serializers.IntegerField(min_value=0, default=2)
    allow_complex = serializers.BooleanField(default=False)
    tol = serializers.FloatField(required=False)

    def validate_tol(self, value):
        if not value > 0:
            raise serializers.ValidationError("the residual tolerance must be positive")
        return value

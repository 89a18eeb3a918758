from rest_framework import serializers

from .models import MomentMethod

# Command-line spellings of the estimation methods
METHOD_ALIASES = {
    'closed': MomentMethod.CLOSED_FORM,
    'quadrature': MomentMethod.QUADRATURE,
    'mc': MomentMethod.MONTE_CARLO,
}


class MomentEstimateSerializer(serializers.Serializer):
    n = serializers.IntegerField(read_only=True)
    value = serializers.FloatField(read_only=True)
    method = serializers.ChoiceField(choices=MomentMethod.choices, read_only=True)
    stderr = serializers.FloatField(read_only=True)
    samples = serializers.IntegerField(read_only=True)
    seed = serializers.IntegerField(read_only=True, allow_null=True)
    shards = serializers.IntegerField(read_only=True, allow_null=True)


class MomentQuerySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    method = serializers.ChoiceField(choices=sorted(METHOD_ALIASES), default='quadrature')
    order = serializers.IntegerField(min_value=8, required=False)
    samples = serializers.IntegerField(min_value=1000, required=False)
    seed = serializers.IntegerField(min_value=0, required=False)
    shards = serializers.IntegerField(min_value=1, required=False)

    def validate(self, data):
        data['method'] = METHOD_ALIASES[data['method']]
        return data

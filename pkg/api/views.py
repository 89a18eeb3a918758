import logging

from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import exception_handler

from expansions.serializers import ExpandQuerySerializer, ExpansionSeriesSerializer
from moments.serializers import MomentEstimateSerializer, MomentQuerySerializer
from resonances.serializers import (
    ExactQuerySerializer, ResonanceModeSerializer, SolvedModeSerializer, SolveQuerySerializer,
)
from special.exceptions import ResonanceError

from . import services
from .serializers import (
    FigureQuerySerializer, FigureRowSerializer, VerificationReportSerializer, VerifyQuerySerializer,
)

logger = logging.getLogger(__name__)


def resonance_exception_handler(exc, context):
    """DRF's handler, plus 422 for domain and convergence errors from the library."""
    if isinstance(exc, ResonanceError):
        logger.info("%s rejected: %s", context['request'].path, exc)
        return Response(
            {'detail': str(exc), 'error': type(exc).__name__},
            status=status.HTTP_422_UNPROCESSABLE_ENTITY,
        )
    return exception_handler(exc, context)


def validated_query(serializer_class, request):
    serializer = serializer_class(data=request.query_params)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data


@api_view(['GET'])
@permission_classes([AllowAny])
def exact(request):
    """
    Closed-form resonance: ?r=1&eta=3[&m=0] for a ball, ?h=0.1&eta0=1 for a nanosphere
    """
    _, mode = services.exact_mode(validated_query(ExactQuerySerializer, request))
    return Response(ResonanceModeSerializer(mode, context=services.serializer_context()).data)


@api_view(['GET'])
@permission_classes([AllowAny])
def solve(request):
    """
    Newton branch scan: ?r=1&eta=3&m_max=2
    """
    _, rows = services.solved_modes(validated_query(SolveQuerySerializer, request))
    return Response(SolvedModeSerializer(rows, many=True, context=services.serializer_context()).data)


@api_view(['GET'])
@permission_classes([AllowAny])
def moments(request):
    """
    Ball moment: ?n=1&method=closed|quadrature|mc
    """
    estimate = services.moment_estimate(validated_query(MomentQuerySerializer, request))
    return Response(MomentEstimateSerializer(estimate).data)


@api_view(['GET'])
@permission_classes([AllowAny])
def expand(request):
    bundle = services.expansion_bundle(validated_query(ExpandQuerySerializer, request))
    return Response({key: ExpansionSeriesSerializer(series).data for key, series in bundle.items()})


@api_view(['GET'])
@permission_classes([AllowAny])
def figure(request):
    rows = services.figure_data(validated_query(FigureQuerySerializer, request))
    return Response(FigureRowSerializer(rows, many=True).data)


@api_view(['GET'])
@permission_classes([AllowAny])
def verify(request):
    """
    Acceptance checks; the payload's ``passed`` is false if any check fails
    """
    report = services.verification_report(validated_query(VerifyQuerySerializer, request))
    return Response(VerificationReportSerializer(report).data)

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


class SubgroupRowSerializer(serializers.Serializer):
    """One member of L(G); witness is null for isolated subgroups"""
    index = serializers.IntegerField()
    order = serializers.IntegerField()
    members = serializers.ListField(child=serializers.IntegerField())
    isolated = serializers.BooleanField()
    normal = serializers.BooleanField()
    witness = serializers.IntegerField(allow_null=True)


class AnalysisSerializer(serializers.Serializer):
    format_version = serializers.IntegerField()
    label = serializers.CharField()
    order = serializers.IntegerField()
    structure_tag = serializers.CharField()
    lattice_size = serializers.IntegerField()
    isolated_count = serializers.IntegerField()
    deficiency_k = serializers.IntegerField()
    is_cp1 = serializers.BooleanField()
    is_isolated_simple = serializers.BooleanField()
    known_family = serializers.CharField(allow_null=True)
    subgroups = SubgroupRowSerializer(many=True)


class PartTallySerializer(serializers.Serializer):
    passed = serializers.IntegerField()
    failed = serializers.IntegerField()


class CounterexampleSerializer(serializers.Serializer):
    """A failing group with everything needed to re-check it by hand"""
    label = serializers.CharField()
    part = serializers.CharField()
    direction = serializers.CharField()
    detail = serializers.CharField()
    structure_tag = serializers.CharField()
    deficiency_k = serializers.IntegerField()
    is_cp1 = serializers.BooleanField()
    non_isolated = SubgroupRowSerializer(many=True)


class FactTallySerializer(PartTallySerializer):
    exceptions = serializers.ListField(child=serializers.CharField())


class CoverageRowSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    classes = serializers.IntegerField()
    coverage = serializers.CharField()


class VerificationSerializer(serializers.Serializer):
    format_version = serializers.IntegerField()
    max_order = serializers.IntegerField()
    groups_checked = serializers.IntegerField()
    ok = serializers.BooleanField()
    parts = serializers.DictField(child=PartTallySerializer())
    classical_facts = serializers.DictField(child=FactTallySerializer())
    coverage = CoverageRowSerializer(many=True)
    failures = CounterexampleSerializer(many=True)


class SearchHitSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    iso_class_id = serializers.IntegerField()
    label = serializers.CharField()
    structure_tag = serializers.CharField()
    lattice_size = serializers.IntegerField()
    known_family = serializers.CharField(allow_null=True)
    novel_candidate = serializers.BooleanField()


class SearchSerializer(serializers.Serializer):
    format_version = serializers.IntegerField()
    max_order = serializers.IntegerField()
    groups_checked = serializers.IntegerField()
    hits = SearchHitSerializer(many=True)


def render_json(serializer_class, document):
    """Serialized document as indented JSON text"""
    data = serializer_class(document).data
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')

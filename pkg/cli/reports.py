# cli/reports.py
"""
Plain-dict documents behind every command, and their human renderings.

The same document feeds the JSON serializers and the text output, so
both formats always carry the same numbers.
"""
import logging

from classifier import (
    classical_facts, known_isolated_simple_family, structure_tag, theorem_predicate,
)
from groups.config import isolatta_setting
from isolation import analyze
from lattice import is_normal

logger = logging.getLogger(__name__)

THEOREM_PARTS = ('a', 'b', 'c')
FACTS = ('maximal-cyclic', 'unique-minimal', 'two-minimal')


def _format_version():
    return isolatta_setting('FORMAT_VERSION', 1)


def _yes_no(flag):
    return 'yes' if flag else 'no'


def subgroup_rows(group, lattice, report, only_non_isolated=False):
    rows = []
    for i, subgroup in enumerate(lattice):
        isolated = report.isolated[i]
        if only_non_isolated and isolated:
            continue
        rows.append({
            'index': i,
            'order': subgroup.order,
            'members': list(subgroup.members),
            'isolated': isolated,
            'normal': report.normal[i] if i in report.normal else is_normal(group, subgroup),
            'witness': report.witnesses.get(i),
        })
    return rows


def analysis_document(group):
    lattice, report = analyze(group)
    tag = structure_tag(group)
    return {
        'format_version': _format_version(),
        'label': group.label,
        'order': group.order,
        'structure_tag': str(tag),
        'lattice_size': report.lattice_size,
        'isolated_count': report.isolated_count,
        'deficiency_k': report.deficiency_k,
        'is_cp1': report.is_cp1,
        'is_isolated_simple': report.is_isolated_simple,
        'known_family': known_isolated_simple_family(group, tag) if report.is_isolated_simple else None,
        'subgroups': subgroup_rows(group, lattice, report),
    }


def render_analysis(doc):
    lines = [
        f"group: {doc['label']}",
        f"order: {doc['order']}",
        f"structure: {doc['structure_tag']}",
        f"|L(G)|: {doc['lattice_size']}",
        f"|Isolated(G)|: {doc['isolated_count']}",
        f"k: {doc['deficiency_k']}",
        f"CP1: {_yes_no(doc['is_cp1'])}",
        f"isolated-simple: {_yes_no(doc['is_isolated_simple'])}",
    ]
    if doc['is_isolated_simple']:
        lines.append(f"known family: {doc['known_family'] or 'none (novel candidate)'}")
    rows = [r for r in doc['subgroups'] if not r['isolated']]
    lines.append('non-isolated subgroups:' if rows else 'non-isolated subgroups: none')
    for row in rows:
        lines.append(_subgroup_line(row))
    return '\n'.join(lines)


def _subgroup_line(row):
    normal = '  normal' if row['normal'] else ''
    return (f"  #{row['index']}  order {row['order']}  members {row['members']}"
            f"  witness {row['witness']}{normal}")


def verification_document(catalog):
    """
    Theorem parts a-c and the classical facts over every catalog entry.

    `ok` depends on the theorem parts only; fact exceptions are reported
    alongside, never as failures.
    """
    parts = {p: {'passed': 0, 'failed': 0} for p in THEOREM_PARTS}
    facts = {f: {'passed': 0, 'failed': 0, 'exceptions': []} for f in FACTS}
    failures = []

    for entry in catalog:
        group = entry.group
        lattice, report = analyze(group)
        tag = structure_tag(group)
        verdict = theorem_predicate(tag, report.is_cp1, report.deficiency_k, group.label)
        for part in verdict.parts:
            parts[part.part]['passed' if part.holds else 'failed'] += 1
        if verdict.failures:
            rows = subgroup_rows(group, lattice, report, only_non_isolated=True)
            for part in verdict.failures:
                logger.warning('[VERIFY] Part %s fails: %s', part.part, part.detail)
                failures.append({
                    'label': group.label,
                    'part': part.part,
                    'direction': part.direction,
                    'detail': part.detail,
                    'structure_tag': str(tag),
                    'deficiency_k': report.deficiency_k,
                    'is_cp1': report.is_cp1,
                    'non_isolated': rows,
                })
        for fact in classical_facts(group, lattice, tag):
            tally = facts[fact.fact]
            if fact.holds:
                tally['passed'] += 1
            else:
                tally['failed'] += 1
                tally['exceptions'].append(fact.detail)

    counts = catalog.class_counts()
    coverage = catalog.coverage_by_order()
    return {
        'format_version': _format_version(),
        'max_order': catalog.max_order,
        'groups_checked': len(catalog),
        'ok': not failures,
        'parts': parts,
        'classical_facts': facts,
        'coverage': [
            {'order': n, 'classes': counts[n - 1], 'coverage': coverage[n]}
            for n in range(1, catalog.max_order + 1)
        ],
        'failures': failures,
    }


def render_verification(doc):
    lines = [f"verified {doc['groups_checked']} groups of order <= {doc['max_order']}"]
    for part, tally in doc['parts'].items():
        lines.append(f"  part {part}: {tally['passed']} passed, {tally['failed']} failed")
    lines.append('classical facts:')
    for fact, tally in doc['classical_facts'].items():
        lines.append(f"  {fact}: {tally['passed']} passed, {tally['failed']} exceptions")
        lines.extend(f'    {detail}' for detail in tally['exceptions'])
    sampled = [str(row['order']) for row in doc['coverage'] if row['coverage'] != 'exhaustive']
    lines.append(f"sampled orders: {', '.join(sampled) if sampled else 'none'}")
    if doc['failures']:
        lines.append('COUNTEREXAMPLES:')
        for failure in doc['failures']:
            lines.append(f"  part {failure['part']} ({failure['direction']}): {failure['detail']}")
            lines.append(f"    tag {failure['structure_tag']}, k={failure['deficiency_k']}, "
                         f"CP1={_yes_no(failure['is_cp1'])}")
            lines.extend(f'  {_subgroup_line(row)}' for row in failure['non_isolated'])
    lines.append('OK' if doc['ok'] else 'FAILED')
    return '\n'.join(lines)


def search_document(catalog, hits):
    return {
        'format_version': _format_version(),
        'max_order': catalog.max_order,
        'groups_checked': len(catalog),
        'hits': [
            {
                'order': hit.entry.order,
                'iso_class_id': hit.entry.iso_class_id,
                'label': hit.entry.canonical_label,
                'structure_tag': str(hit.tag),
                'lattice_size': hit.report.lattice_size,
                'known_family': hit.family,
                'novel_candidate': hit.novel_candidate,
            }
            for hit in hits
        ],
    }


def render_search(doc):
    lines = [f"isolated-simple groups of order <= {doc['max_order']} "
             f"({len(doc['hits'])} of {doc['groups_checked']}):"]
    for hit in doc['hits']:
        marker = '*' if hit['novel_candidate'] else ' '
        family = hit['known_family'] or 'NOVEL CANDIDATE'
        lines.append(f"{marker} {hit['order']}\t{hit['iso_class_id']}\t{hit['label']}"
                     f"\t{hit['structure_tag']}\t{family}")
    return '\n'.join(lines)


def render_catalog(catalog):
    return '\n'.join(f'{e.order}\t{e.iso_class_id}\t{e.canonical_label}\t{e.coverage}' for e in catalog)

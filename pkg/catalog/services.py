# catalog/services.py
import logging
from dataclasses import dataclass, field
from pathlib import Path

from classifier import known_isolated_simple_family, structure_tag
from groups import is_isomorphic
from groups.config import order_cap
from groups.exceptions import OrderCapExceeded
from groups.io import load_perm_file
from isolation import analyze

from .coverage import coverage_for
from .recipes import recipe_specs
from .spec_parser import build_group

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    """One isomorphism class: the first recipe that built it, plus the duplicates folded into it"""
    group: object
    canonical_label: str
    iso_class_id: int
    coverage: str
    source: str = 'recipe'
    aliases: tuple = ()

    @property
    def order(self):
        return self.group.order


@dataclass(frozen=True)
class Catalog:
    max_order: int
    entries: tuple

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def of_order(self, order):
        return [e for e in self.entries if e.order == order]

    def class_counts(self):
        return [len(self.of_order(n)) for n in range(1, self.max_order + 1)]

    def coverage_by_order(self):
        return {n: coverage_for(n) for n in range(1, self.max_order + 1)}

    def find(self, label):
        for entry in self.entries:
            if entry.canonical_label == label or label in entry.aliases:
                return entry
        return None


def load_extra_groups(directory, cap=None):
    """
    One permutation-generator file per group; the file stem becomes the
    label. Groups beyond the cap are skipped with a warning, malformed
    files raise.
    """
    found = []
    for path in sorted(p for p in Path(directory).iterdir() if p.is_file()):
        try:
            found.append(load_perm_file(path, cap=cap, label=path.stem))
        except OrderCapExceeded as exc:
            logger.warning('[CATALOG] Skipping extra group %s: %s', path.name, exc)
    logger.info('[CATALOG] Loaded %d extra group(s) from %s', len(found), directory)
    return found


def _candidates(max_order, extra_groups, cap):
    extras_by_order = {}
    for group in extra_groups:
        if group.order > max_order:
            logger.warning('[CATALOG] Extra group %s has order %d > %d, ignored',
                           group.label, group.order, max_order)
            continue
        extras_by_order.setdefault(group.order, []).append(group)

    for n in range(1, max_order + 1):
        for text in recipe_specs(n):
            try:
                yield build_group(text, cap=cap), 'recipe'
            except OrderCapExceeded as exc:
                logger.warning('[CATALOG] Skipping recipe %s: %s', text, exc)
        for group in extras_by_order.get(n, []):
            yield group, 'extra'


def build_catalog(max_order, extra_dir=None, cap=None):
    """
    Evaluate the recipe list (plus any extra generator files) for orders
    1..max_order and keep one entry per isomorphism class.

    Candidates are compared by fingerprint first and by is_isomorphic
    only on a fingerprint match; ids are handed out in candidate order, so
    they are stable for a given recipe list and inputs.
    """
    limit = order_cap(cap)
    if max_order > limit:
        raise OrderCapExceeded(max_order, limit)

    extra = load_extra_groups(extra_dir, cap=limit) if extra_dir else []
    kept = []
    by_fingerprint = {}
    duplicates = 0
    for group, source in _candidates(max_order, extra, limit):
        bucket = by_fingerprint.setdefault(group.fingerprint, [])
        match = next((record for record in bucket if is_isomorphic(record['group'], group)), None)
        if match is not None:
            match['aliases'].append(group.label)
            duplicates += 1
            continue
        record = {'group': group, 'source': source, 'aliases': []}
        bucket.append(record)
        kept.append(record)

    entries = tuple(
        CatalogEntry(
            group=record['group'],
            canonical_label=record['group'].label,
            iso_class_id=index,
            coverage=coverage_for(record['group'].order),
            source=record['source'],
            aliases=tuple(record['aliases']),
        )
        for index, record in enumerate(kept, 1)
    )
    logger.info('[CATALOG] %d classes up to order %d (%d duplicate recipes folded)',
                len(entries), max_order, duplicates)
    return Catalog(max_order=max_order, entries=entries)


@dataclass(frozen=True)
class SearchHit:
    entry: CatalogEntry
    tag: object
    family: object
    report: object = field(repr=False)

    @property
    def novel_candidate(self):
        return self.family is None


def _default_report(group):
    return analyze(group)[1]


def search_isolated_simple(catalog, report_fn=None):
    """
    Catalog entries whose only isolated subgroups are 1 and G, each
    tagged and matched against the known families; entries outside every
    known family are novel candidates.
    """
    report_fn = report_fn or _default_report
    hits = []
    for entry in catalog:
        report = report_fn(entry.group)
        if not report.is_isolated_simple:
            continue
        tag = structure_tag(entry.group)
        family = known_isolated_simple_family(entry.group, tag)
        hits.append(SearchHit(entry=entry, tag=tag, family=family, report=report))
        if family is None:
            logger.info('[CATALOG] Novel isolated-simple candidate: %s', entry.canonical_label)
    return hits

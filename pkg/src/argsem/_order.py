"""Canonical orderings used for every serialized output."""

import re

_DIGITS = re.compile(r"(\d+)")


def label_key(label):
    # natural order, so r2 sorts before r10
    parts = _DIGITS.split(label)
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p), label


def sorted_labels(labels):
    return sorted(labels, key=label_key)


def set_key(members):
    """Order sets by size, then member-wise by label."""
    ordered = sorted_labels(members)
    return len(ordered), [label_key(m) for m in ordered]


def sorted_sets(sets):
    return sorted(sets, key=set_key)

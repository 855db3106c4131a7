"""Immacutations: the permutation-like tuples of integer sets counted by a(n).

An immacutation of order n carries a class lam, a strictly decreasing weak
partition ending in 0 with largest part at most n-1.  Its entries come in
consecutive pairs, one pair per class part: with lam[0] preceded by the
implicit lam[-1] = n, the pair at position i consists of two subsets of
{1, ..., prev - 1} of size prev - 1 - lam[i], where prev is the part before
lam[i].  Sets are stored as sorted tuples so that immacutations hash and
compare canonically; the empty set is the empty tuple.
"""

from dataclasses import dataclass
from itertools import product

from immaculate.compositions import Composition, triangle_key, subsets_of_range

EntrySet = tuple[int, ...]


@dataclass(frozen=True)
class Immacutation:
    order: int
    klass: tuple[int, ...]
    entries: tuple[EntrySet, ...]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "class": list(self.klass),
            "entries": [list(entry) for entry in self.entries],
        }

    def to_text(self) -> str:
        sets = ", ".join("{" + ",".join(str(v) for v in e) + "}" for e in self.entries)
        return f"class=({','.join(str(p) for p in self.klass)}) entries=({sets})"


def immacutation_from_json(doc: dict) -> Immacutation:
    try:
        order = int(doc["order"])
        klass = tuple(int(p) for p in doc["class"])
        entries = tuple(tuple(sorted(int(v) for v in e)) for e in doc["entries"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed immacutation document: {doc!r}") from exc
    return Immacutation(order, klass, entries)


def is_valid_class(klass: tuple[int, ...], order: int) -> bool:
    """Strictly decreasing, ends in 0, largest part at most order - 1."""
    if order < 1 or not klass or klass[-1] != 0:
        return False
    if any(not isinstance(p, int) or p < 0 for p in klass):
        return False
    if any(klass[i] <= klass[i + 1] for i in range(len(klass) - 1)):
        return False
    return klass[0] <= order - 1


def _slot_constraints(klass: tuple[int, ...], order: int) -> list[tuple[int, int]]:
    """(universe limit, required size) for each consecutive pair of entries."""
    prev = order
    slots = []
    for part in klass:
        slots.append((prev - 1, prev - 1 - part))
        prev = part
    return slots


def validate(t: Immacutation) -> bool:
    """Check the class shape and every cardinality/subset constraint."""
    if not is_valid_class(t.klass, t.order):
        return False
    if len(t.entries) != 2 * len(t.klass):
        return False
    for i, (limit, size) in enumerate(_slot_constraints(t.klass, t.order)):
        for entry in (t.entries[2 * i], t.entries[2 * i + 1]):
            if len(entry) != size or len(set(entry)) != size:
                return False
            if tuple(sorted(entry)) != tuple(entry):
                return False
            if any(not 1 <= v <= limit for v in entry):
                return False
    return True


def shape_of(t: Immacutation) -> Composition:
    """The composition of consecutive class differences, starting from the order."""
    if not validate(t):
        raise ValueError(f"invalid immacutation: {t!r}")
    prev = t.order
    parts = []
    for part in t.klass:
        parts.append(prev - part)
        prev = part
    return tuple(parts)


def class_for_shape(shape: Composition) -> tuple[int, ...]:
    """Inverse of shape_of on classes: complementary partial sums of the shape."""
    n = sum(shape)
    running = 0
    klass = []
    for part in shape:
        running += part
        klass.append(n - running)
    return tuple(klass)


def enumerate_classes(n: int) -> list[tuple[int, ...]]:
    """All classes of order n: decreasing subsets of {0, ..., n-1} containing 0."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    classes = []

    def extend(prefix, top):
        if prefix and prefix[-1] == 0:
            classes.append(tuple(prefix))
            return
        for part in range(top, -1, -1):
            extend(prefix + [part], part - 1)

    extend([], n - 1)
    return classes


def _word(entry: EntrySet) -> tuple[int, ...]:
    return entry if entry else (0,)


def ordering_key(t: Immacutation):
    """Shape under the (1^n)-first order, then entrywise word comparison."""
    return (triangle_key(shape_of(t)), tuple(_word(e) for e in t.entries))


def immacutation_compare(t1: Immacutation, t2: Immacutation) -> int:
    """Total order on immacutations of one order (see ordering_key)."""
    if t1.order != t2.order:
        raise ValueError(f"cannot compare immacutations of orders {t1.order} and {t2.order}")
    k1, k2 = ordering_key(t1), ordering_key(t2)
    if k1 < k2:
        return -1
    if k1 > k2:
        return 1
    return 0


def enumerate_immacutations(n: int, klass: tuple[int, ...] | None = None) -> list[Immacutation]:
    """All immacutations of order n (optionally of one class), in sorted order."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if klass is not None:
        if not is_valid_class(tuple(klass), n):
            raise ValueError(f"invalid class for order {n}: {klass!r}")
        classes = [tuple(klass)]
    else:
        classes = enumerate_classes(n)
    found = []
    for kl in classes:
        choice_lists = []
        for limit, size in _slot_constraints(kl, n):
            per_slot = subsets_of_range(limit, size)
            choice_lists.append(per_slot)  # first of the pair
            choice_lists.append(per_slot)  # second of the pair
        for entries in product(*choice_lists):
            found.append(Immacutation(n, kl, entries))
    found.sort(key=ordering_key)
    return found

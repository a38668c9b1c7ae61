"""
Parse variant labels given on the command line.

    gl:4  sl:5  so:7  sp:6  so_even:8
    group:pgl:4  group:so:7  group:sc:sp:4
    sd:sl:6  orth:sl:6
"""

from ..exceptions import InvalidInputError
from ..root_systems import (
    AlgebraId,
    Family,
    GroupId,
    VariantSpec,
    algebra_variant,
    group_sublattice,
    orthogonal_sublattice,
    selfdual_embedding,
)

LABEL_HELP = (
    "gl:n, sl:n, so:N, sp:2n, so_even:2n, "
    "group:pgl:n, group:so:N, group:sc:<algebra>, sd:<algebra>, orth:<algebra>"
)


def _size(text: str, label: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidInputError(f"Bad size {text!r} in {label!r}, expected {LABEL_HELP}") from None


def parse_algebra(label: str) -> AlgebraId:
    """gl:n, sl:n, so:N, sp:2n or so_even:2n."""
    family, sep, size = label.strip().lower().partition(":")
    if not sep:
        raise InvalidInputError(f"Bad algebra {label!r}, expected family:size")
    n = _size(size, label)
    if family == "gl":
        return AlgebraId.gl(n)
    if family == "sl":
        return AlgebraId.sl(n)
    if family == "so":
        return AlgebraId.so(n)
    if family == "sp":
        return AlgebraId.sp(n)
    if family == "so_even":
        if n % 2:
            raise InvalidInputError(f"so_even needs an even matrix size, got {n}")
        return AlgebraId(Family.SO_EVEN, n // 2)
    raise InvalidInputError(f"Unknown algebra family {family!r} in {label!r}")


def parse_group(label: str) -> GroupId:
    """pgl:n, so:N or sc:<algebra>."""
    kind, sep, rest = label.strip().lower().partition(":")
    if not sep:
        raise InvalidInputError(f"Bad group {label!r}, expected pgl:n, so:N or sc:<algebra>")
    if kind == "pgl":
        return GroupId.pgl(_size(rest, label))
    if kind == "so":
        return GroupId.so(_size(rest, label))
    if kind == "sc":
        return GroupId.simply_connected(parse_algebra(rest))
    raise InvalidInputError(f"Unknown group kind {kind!r} in {label!r}")


def parse_variant(label: str) -> VariantSpec:
    """
    Variant named by a command-line label.

    Raises:
        InvalidInputError: If the label does not parse
        UnsupportedVariantError: If it names an unsupported algebra or group
    """
    head, sep, rest = label.strip().lower().partition(":")
    if not sep:
        raise InvalidInputError(f"Bad variant {label!r}, expected one of {LABEL_HELP}")
    if head == "group":
        return group_sublattice(parse_group(rest))
    if head == "sd":
        return selfdual_embedding(parse_algebra(rest))
    if head == "orth":
        return orthogonal_sublattice(parse_algebra(rest))
    return algebra_variant(parse_algebra(label))

"""The built-in verification corpus of small groups.

The default corpus (Z4, Z6, Z2xZ2, S3, D4, Q8, S4) is bounded so that the
full claim suite over all subgroup pairs runs in seconds.  It can be narrowed
or reordered with the COSETRADON_CORPUS environment variable (a comma list of
corpus names).
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from pathlib import Path
from typing import Callable

from .errors import ValidationError
from .groups import (
    FiniteGroup,
    build_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    symmetric_group,
)

CORPUS_ENV = "COSETRADON_CORPUS"

_BUILDERS: dict[str, Callable[[], FiniteGroup]] = {
    "Z4": lambda: cyclic_group(4, "Z4"),
    "Z6": lambda: cyclic_group(6, "Z6"),
    "Z2xZ2": lambda: direct_product(cyclic_group(2), cyclic_group(2), "Z2xZ2"),
    "S3": lambda: symmetric_group(3, "S3"),
    "D4": lambda: dihedral_group(4, "D4"),
    "Q8": lambda: quaternion_group("Q8"),
    "S4": lambda: symmetric_group(4, "S4"),
}

DEFAULT_CORPUS = ("Z4", "Z6", "Z2xZ2", "S3", "D4", "Q8", "S4")


@lru_cache(maxsize=None)
def corpus_group(name: str) -> FiniteGroup:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValidationError(
            f"unknown corpus group {name!r}; known: {', '.join(sorted(_BUILDERS))}"
        ) from None
    return builder()


def default_corpus_names() -> tuple[str, ...]:
    override = os.environ.get(CORPUS_ENV)
    if not override:
        return DEFAULT_CORPUS
    names = tuple(part.strip() for part in override.split(",") if part.strip())
    for name in names:
        if name not in _BUILDERS:
            raise ValidationError(
                f"{CORPUS_ENV} names unknown group {name!r}; known: "
                f"{', '.join(sorted(_BUILDERS))}"
            )
    return names


def load_group(spec: str) -> FiniteGroup:
    """Resolve a CLI group argument.

    Accepts a corpus name (Z4, S3, ...), an inline constructor
    (cyclic:N, dihedral:N, symmetric:N, quaternion8), or a path to a JSON
    group-specification file.
    """
    if spec in _BUILDERS:
        return corpus_group(spec)
    if ":" in spec:
        kind, _, arg = spec.partition(":")
        if kind in ("cyclic", "dihedral", "symmetric"):
            return build_group({"kind": kind, "n": int(arg)})
    if spec == "quaternion8":
        return quaternion_group()
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ValidationError(f"cannot read group file {spec}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValidationError(f"group file {spec} is not valid JSON: {exc}") from exc
        return build_group(payload)
    raise ValidationError(
        f"cannot interpret group {spec!r}: not a corpus name, constructor, or file"
    )

"""File formats: field descriptions, code files, reports, histograms.

Everything is JSON with sorted keys and a fixed indent, so identical inputs
produce byte-identical files.  Field elements are serialized as little-endian
F_p coefficient vectors of length h*m; a word is the list of its m elements
in index order.

A code file carries the field description, the parameters (m, q, claimed
distance, I) and the tagged component word lists, each sorted.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from .gfield import FieldCtx, make_field
from .codes import Component, RankCode
from .linforms import Word

CODE_FORMAT = "rank-code/v1"


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(path: Union[str, Path], obj) -> None:
    Path(path).write_text(dumps_canonical(obj), encoding="utf-8")


def read_json(path: Union[str, Path]):
    return json.loads(Path(path).read_text(encoding="utf-8"))


# ----------------------------------------------------------------------
# fields and elements
# ----------------------------------------------------------------------

def field_to_dict(ctx: FieldCtx) -> dict:
    return ctx.describe()


def field_from_dict(d: dict) -> FieldCtx:
    return make_field(int(d["p"]), int(d["h"]), int(d["m"]), d["modulus"])


def element_to_list(ctx: FieldCtx, x: int) -> List[int]:
    return list(ctx.coeffs(x))


def element_from_list(ctx: FieldCtx, cs: Sequence[int]) -> int:
    return ctx.from_coeffs(cs)


def word_to_lists(ctx: FieldCtx, w: Word) -> List[List[int]]:
    return [element_to_list(ctx, x) for x in w]


def word_from_lists(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> Word:
    if len(rows) != ctx.m:
        raise ValueError(f"word must have {ctx.m} elements")
    return tuple(element_from_list(ctx, r) for r in rows)


# ----------------------------------------------------------------------
# code files
# ----------------------------------------------------------------------

def code_to_dict(code: RankCode) -> dict:
    ctx = code.ctx
    i_params = [
        element_to_list(ctx, c.a) for c in code.components if c.kind == "PI"
    ]
    return {
        "format": CODE_FORMAT,
        "field": field_to_dict(ctx),
        "params": {
            "m": ctx.m,
            "q": ctx.q,
            "claimed_distance": code.claimed_distance,
            "I": i_params,
        },
        "components": [
            {
                "kind": c.kind,
                "a": element_to_list(ctx, c.a) if c.a is not None else None,
                "words": [word_to_lists(ctx, w) for w in sorted(c.words)],
            }
            for c in code.components
        ],
    }


def code_from_dict(d: dict) -> RankCode:
    """Rebuild a code from its file form.

    Orbit representatives are re-derived from the component kind; a
    representative that is missing from the (possibly tampered) word list
    downgrades the component to plain membership, so verification can still
    run and report the damage instead of failing to load.
    """
    from .codes import j_generator, pi_generator

    if d.get("format") != CODE_FORMAT:
        raise ValueError(f"unsupported file format {d.get('format')!r}")
    ctx = field_from_dict(d["field"])
    params = d["params"]
    claimed = int(params["claimed_distance"])
    comps = []
    for cd in d["components"]:
        kind = cd["kind"]
        a = element_from_list(ctx, cd["a"]) if cd.get("a") is not None else None
        words = frozenset(word_from_lists(ctx, w) for w in cd["words"])
        rep: Optional[Word] = None
        if kind == "PI" and a is not None:
            rep = pi_generator(ctx, a)
        elif kind == "J" and a is not None:
            rep = j_generator(ctx, a)
        elif kind == "A1":
            rep = (1,) + (0,) * (ctx.m - 1)
        elif kind == "A2":
            rep = (0,) * (ctx.m - 1) + (1,)
        elif kind == "ZERO":
            rep = (0,) * ctx.m
        if rep is not None and rep not in words:
            rep = None
        comps.append(Component(kind, a, words, rep))
    words_union: set = set()
    for c in comps:
        if words_union & c.words:
            raise ValueError("file components overlap")
        words_union |= c.words
    return RankCode(ctx, claimed, tuple(comps), frozenset(words_union))


def save_code(path: Union[str, Path], code: RankCode) -> None:
    write_json(path, code_to_dict(code))


def load_code(path: Union[str, Path]) -> RankCode:
    return code_from_dict(read_json(path))


# ----------------------------------------------------------------------
# histograms
# ----------------------------------------------------------------------

def histogram_to_csv(hist: Dict[int, int]) -> str:
    lines = ["rank,count"]
    for r in sorted(hist):
        lines.append(f"{r},{hist[r]}")
    return "\n".join(lines) + "\n"

"""``codeal`` command-line entry point."""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

from .code import (CodeError, LinearCode, all_words, coset_leader_bruteforce,
                   coset_leaders_bruteforce, min_distance, parse_matrix_text, support, weight)
from .crossing import TermOrder, format_monomial
from .decode import decode, gb_codeword_coverage, minimal_support_codewords, normalize
from .field import FieldError, FieldSpec, parse_field_text
from .gbasis import (BASIS, DEFAULT_COSET_CAP, InternalOrderViolation, check_groebner,
                     compute_reduced_gb, verify_theorem1)
from .ideal import assemble_generators

COMMANDS = ("field-info", "code-info", "make-ideal", "gb", "decode", "verify", "minsupp")


@dataclass
class RunConfig:
    command: str
    field_path: Path
    matrix_path: Optional[Path] = None
    fmt: str = "human"
    seed: int = 0
    samples: int = 200
    coset_cap: int = DEFAULT_COSET_CAP
    trace: bool = False
    order_path: Optional[Path] = None
    eager_multiples: bool = False
    word: Optional[List[str]] = None
    decode_all: bool = False
    random_words: int = 10**4


class Emitter:
    """Writes ``label: value`` for humans or ``key=value`` for scripts."""

    def __init__(self, fmt: str, out: TextIO):
        self.fmt = fmt
        self.out = out

    def kv(self, key: str, value, label: Optional[str] = None) -> None:
        if self.fmt == "lines":
            self.out.write(f"{key}={value}\n")
        else:
            self.out.write(f"{label or key.replace('_', ' ')}: {value}\n")

    def line(self, text: str) -> None:
        self.out.write(text + "\n")

    def human(self, text: str) -> None:
        if self.fmt == "human":
            self.out.write(text + "\n")


def parse_inputs(field_path: Path, matrix_path: Optional[Path]) -> Tuple[FieldSpec, Optional[LinearCode]]:
    spec = parse_field_text(Path(field_path).read_text())
    code = parse_matrix_text(Path(matrix_path).read_text(), spec) if matrix_path else None
    return spec, code


def _vec(spec: FieldSpec, v: Sequence[int]) -> str:
    return " ".join(spec.format_element(a) for a in v)


def _field_info(spec: FieldSpec, em: Emitter) -> int:
    q = spec.q
    em.kv("p", spec.p)
    em.kv("r", spec.r)
    em.kv("q", q)
    em.kv("f", " ".join(map(str, spec.f_coeffs)))
    em.human("powers:")
    for j in range(1, q):
        if em.fmt == "lines":
            em.line(f"power[{j}]={spec.format_poly(j)}")
        else:
            em.line(f"  a^{j} = {spec.format_poly(j)}")
    if em.fmt == "lines":
        for (u, v), w in sorted(spec.add_table.items()):
            em.line(f"add[{u},{v}]={w}")
        return 0
    width = len(str(q - 1))
    cols = " ".join(f"{j:>{width}}" for j in range(1, q))
    em.line("additive table:")
    em.line(f"{'T+':>{width + 1}} | {cols}")
    em.line("-" * (width + 2) + "+" + "-" * (len(cols) + 1))
    for u in range(1, q):
        cells = [" " * width if v < u else f"{spec.add_table[(u, v)]:>{width}}" for v in range(1, q)]
        em.line(f"{u:>{width + 1}} | {' '.join(cells).rstrip()}")
    return 0


def _code_info(code: LinearCode, em: Emitter) -> int:
    d = min_distance(code)
    em.kv("n", code.n)
    em.kv("k", code.k)
    em.kv("d", d)
    em.kv("t", (d - 1) // 2)
    for row in code.H:
        em.kv("H", _vec(code.spec, row), label="parity check row")
    return 0


def _make_ideal(code: LinearCode, order: TermOrder, em: Emitter) -> int:
    gens = assemble_generators(code, order)
    em.kv("generators", len(gens))
    for g in gens:
        em.line(f"generator={g}" if em.fmt == "lines" else str(g))
    return 0


def _print_trace(gb, em: Emitter) -> None:
    spec = gb.code.spec
    em.human("trace:")
    for step, entry in enumerate(gb.trace, 1):
        img = _vec(spec, entry.image)
        note = entry.kind
        if entry.kind == BASIS:
            note = f"basis {format_monomial(entry.term)} - {format_monomial(entry.trail)}"
        if em.fmt == "lines":
            em.line(f"trace[{step}]={format_monomial(entry.term)} | {img} | {note}")
        else:
            em.line(f"  introduce {format_monomial(entry.term):<24} | {img} | {note}")


def _gb(code: LinearCode, cfg: RunConfig, order: TermOrder, em: Emitter) -> int:
    gb = compute_reduced_gb(code, order, cap=cfg.coset_cap, eager_multiples=cfg.eager_multiples,
                            trace=cfg.trace)
    if cfg.trace:
        _print_trace(gb, em)
    em.human("reduced Groebner basis:")
    for g in gb.sorted_elements():
        em.line(f"element={g}" if em.fmt == "lines" else f"  {g}")
    em.kv("elements", len(gb))
    em.kv("standard_monomials", len(gb.standard_monomials))
    ok = check_groebner(gb).ok
    em.kv("groebner", "pass" if ok else "FAIL")
    return 0 if ok else 1


def _decode(code: LinearCode, cfg: RunConfig, order: TermOrder, em: Emitter) -> int:
    spec = code.spec
    gb = compute_reduced_gb(code, order, cap=cfg.coset_cap)
    if cfg.decode_all:
        return _decode_all(code, gb, cfg, em)
    y = tuple(spec.parse_element(t) for t in cfg.word)
    res = decode(gb, y)
    other = decode(gb, y, method="table")
    em.kv("received", _vec(spec, res.received))
    em.kv("error", _vec(spec, res.error))
    em.kv("codeword", _vec(spec, res.codeword))
    em.kv("weight", res.weight)
    if other != res:
        em.kv("paths", "DISAGREE")
        return 1
    return 0


def _decode_all(code: LinearCode, gb, cfg: RunConfig, em: Emitter) -> int:
    leaders = coset_leaders_bruteforce(gb.code, gb.order) if code.q**code.n <= 10**4 else None
    if leaders is not None:
        words = all_words(code.n, code.q)
        mode = "exhaustive"
    else:
        rng = random.Random(cfg.seed)
        words = [tuple(rng.randrange(code.q) for _ in range(code.n)) for _ in range(cfg.random_words)]
        mode = "random"
    count = mismatches = 0
    for y in words:
        count += 1
        d1 = decode(gb, y)
        d2 = decode(gb, y, method="table")
        oracle = leaders[code.syndrome(y)] if leaders is not None else \
            coset_leader_bruteforce(code, y, gb.order)
        if d1 != d2 or d1.weight != weight(oracle):
            mismatches += 1
    em.kv("mode", mode)
    em.kv("words", count)
    em.kv("mismatches", mismatches)
    em.kv("decode_all", "pass" if mismatches == 0 else "FAIL")
    return 0 if mismatches == 0 else 1


def _verify(code: LinearCode, cfg: RunConfig, order: TermOrder, em: Emitter) -> int:
    gb = compute_reduced_gb(code, order, cap=cfg.coset_cap)
    report = verify_theorem1(code, gb, cfg.samples, random.Random(cfg.seed))
    check = check_groebner(gb)
    em.kv("theorem1", "pass" if report.ok else "FAIL")
    em.kv("sgroebner", "pass" if check.ok else "FAIL")
    em.kv("pairs_sampled", report.pairs)
    em.kv("spairs_checked", check.pairs_checked)
    return 0 if report.ok and check.ok else 1


def _minsupp(code: LinearCode, cfg: RunConfig, order: TermOrder, em: Emitter) -> int:
    spec = code.spec
    classes = minimal_support_codewords(code)
    covered = None
    if code.num_cosets() <= cfg.coset_cap:
        gb = compute_reduced_gb(code, order, cap=cfg.coset_cap)
        covered = set(gb_codeword_coverage(gb, code).covered)
    em.kv("classes", len(classes))
    for cls in classes:
        rep = normalize(spec, cls[0])
        supp = ",".join(map(str, sorted(support(rep))))
        tag = "" if covered is None else f" in_gb={'yes' if rep in covered else 'no'}"
        em.line(f"class={_vec(spec, rep)} support={supp} size={len(cls)}{tag}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("human", "lines"), default="human")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--coset-cap", type=int, default=DEFAULT_COSET_CAP)
    common.add_argument("--order-file", type=Path, default=None,
                        help="variable names, highest precedence first")

    parser = argparse.ArgumentParser(prog="codeal",
                                     description="Groebner bases of binomial ideals of linear codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", parents=[common], help="power and additive tables")
    p.add_argument("field", type=Path)

    for name, helptext in [("code-info", "n, k, d, t"),
                           ("make-ideal", "generators of I(C)"),
                           ("minsupp", "minimal-support codeword classes")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("field", type=Path)
        p.add_argument("matrix", type=Path)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    p.add_argument("field", type=Path)
    p.add_argument("matrix", type=Path)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--eager-multiples", action="store_true")

    p = sub.add_parser("decode", parents=[common], help="complete decoding")
    p.add_argument("field", type=Path)
    p.add_argument("matrix", type=Path)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", nargs="+")
    g.add_argument("--all", dest="decode_all", action="store_true")
    p.add_argument("--random-words", type=int, default=10**4)

    p = sub.add_parser("verify", parents=[common], help="Groebner and ideal-equality checks")
    p.add_argument("field", type=Path)
    p.add_argument("matrix", type=Path)
    p.add_argument("--samples", type=int, default=200)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        field_path=ns.field,
        matrix_path=getattr(ns, "matrix", None),
        fmt=ns.fmt,
        seed=ns.seed,
        samples=getattr(ns, "samples", 200),
        coset_cap=ns.coset_cap,
        trace=getattr(ns, "trace", False),
        order_path=ns.order_file,
        eager_multiples=getattr(ns, "eager_multiples", False),
        word=getattr(ns, "word", None),
        decode_all=getattr(ns, "decode_all", False),
        random_words=getattr(ns, "random_words", 10**4),
    )


def run(cfg: RunConfig, out: Optional[TextIO] = None) -> int:
    em = Emitter(cfg.fmt, out or sys.stdout)
    spec, code = parse_inputs(cfg.field_path, cfg.matrix_path)
    if cfg.command == "field-info":
        return _field_info(spec, em)
    if cfg.order_path is not None:
        order = TermOrder.parse(Path(cfg.order_path).read_text(), code.n, code.q)
    else:
        order = TermOrder.default(code.n, code.q)
    if cfg.command == "code-info":
        return _code_info(code, em)
    if cfg.command == "make-ideal":
        return _make_ideal(code, order, em)
    if cfg.command == "gb":
        return _gb(code, cfg, order, em)
    if cfg.command == "decode":
        return _decode(code, cfg, order, em)
    if cfg.command == "verify":
        return _verify(code, cfg, order, em)
    if cfg.command == "minsupp":
        return _minsupp(code, cfg, order, em)
    raise ValueError(f"unknown command {cfg.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    if cfg.coset_cap < 1 or getattr(ns, "samples", 1) < 1:
        parser.error("caps and sample counts must be positive")
    try:
        return run(cfg)
    except (FieldError, CodeError, InternalOrderViolation, ValueError, OSError) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"error={type(exc).__name__} message={msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Batch command-line front end: one subcommand per headline quantity,
CSV/JSON artifacts, reproducible across runs."""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .adic import AdicInt, embed
from .basis import Basis, parse_basis
from .characters import Character, parse_character, reduce_phase
from .ergodic import (CylinderFunction, compare, cylinder_from_dict,
                      cylinder_to_dict, empirical_average, predicted_limit,
                      torus_average)
from .multipliers import (BudgetError, complete_exp_sum, multiplier_natural,
                          multiplier_prime, wiener_energy)
from .weyl import adic_weyl_sum


def _fmt(x: float) -> str:
    return format(x, ".17g")


@dataclass
class ExperimentConfig:
    """Validated inputs for one run; unknown keys in a config file are
    rejected so typos fail loudly."""

    basis: str | None = None
    r: int | None = None
    rho: str | None = None
    char: str | None = None
    n_schedule: list[int] | None = None
    source: str = "primes"
    kind: str = "prime"
    q: int | None = None
    psi: str | None = None
    beta: str | None = None
    freqs: str | None = None
    coeffs: str | None = None
    x: str = "0"
    r_max: int | None = None
    function: str | None = None
    seed: int = 0
    out: str | None = None
    max_modulus: int = 1 << 20
    threads: int = 1

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}

    def schedule(self, default: list[int]) -> list[int]:
        return self.n_schedule if self.n_schedule is not None else default

    def parsed_basis(self) -> Basis:
        if self.basis is None:
            raise SystemExit("error: --basis is required")
        return parse_basis(self.basis)

    def parsed_rho(self, basis: Basis, r: int) -> list[AdicInt]:
        if self.rho is None:
            raise SystemExit("error: --rho is required")
        try:
            ints = [int(c) for c in self.rho.split(",")]
        except ValueError:
            raise SystemExit(f"error: bad rho coefficients {self.rho!r}") from None
        return [embed(c, basis, r) for c in ints]

    def parsed_char(self, basis: Basis) -> Character:
        if self.char is None:
            raise SystemExit("error: --char is required")
        try:
            return parse_character(self.char, basis)
        except ValueError as exc:
            raise SystemExit(f"error: {exc}") from None


def parse_config(args: argparse.Namespace) -> ExperimentConfig:
    """Merge a config file (if given) with command-line flags; flags win."""
    cfg = ExperimentConfig()
    if getattr(args, "config", None):
        with open(args.config) as fh:
            doc = json.load(fh)
        doc = doc.get("config", doc)
        for key, value in doc.items():
            if not hasattr(cfg, key):
                raise SystemExit(f"error: unknown config key {key!r}")
            setattr(cfg, key, value)
    for key in vars(cfg):
        flag = getattr(args, key, None)
        if flag is not None:
            setattr(cfg, key, flag)
    return cfg


def emit_report(cfg: ExperimentConfig, rows: list[dict], summary: dict,
                header: list[str] | None = None):
    """Write <out>.csv (the row series) and <out>.json (config echo plus
    summary); all floats at full double precision."""
    if cfg.out is None:
        return
    if header is None:
        header = list(rows[0]) if rows else []
    with open(cfg.out + ".csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row.values()])
    doc = {"config": cfg.to_dict(), **summary}
    with open(cfg.out + ".json", "w") as fh:
        json.dump(doc, fh, indent=2, default=_json_default)
        fh.write("\n")


def _json_default(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    raise TypeError(f"not serializable: {type(v)}")


def _print_complex(label: str, z: complex):
    print(f"{label}: {_fmt(z.real)} {'+' if z.imag >= 0 else '-'} {_fmt(abs(z.imag))}i"
          f"  (abs {_fmt(abs(z))})")


def _degree_notice(cfg: ExperimentConfig, rho: list[AdicInt]):
    degree = max((j for j, c in enumerate(rho) if c.v != 0), default=0)
    if cfg.kind == "prime" and degree < 2:
        print("notice: polynomial degree < 2; prime-limit theory assumes degree >= 2,"
              " the reported value is still the character-sum limit", file=sys.stderr)


def cmd_gauss(cfg: ExperimentConfig) -> int:
    if cfg.q is None:
        raise SystemExit("error: --q is required")
    psi = [int(c) for c in (cfg.psi or "0,1").split(",")]
    value = complete_exp_sum(psi, cfg.q)
    _print_complex("complete exponential sum", value)
    emit_report(cfg, [{"q": cfg.q, "re": value.real, "im": value.imag, "abs": abs(value)}],
                {"value": value, "magnitude": abs(value)})
    return 0


def cmd_multiplier(cfg: ExperimentConfig) -> int:
    basis = cfg.parsed_basis()
    chi = cfg.parsed_char(basis)
    rho = cfg.parsed_rho(basis, chi.r)
    _degree_notice(cfg, rho)
    phase = reduce_phase(chi, rho)
    mult = multiplier_prime(phase) if cfg.kind == "prime" else multiplier_natural(phase)
    _print_complex(f"{cfg.kind} multiplier (modulus {phase.modulus})", mult.value)
    emit_report(cfg, [{"char": chi.spec_string(), "modulus": phase.modulus,
                       "re": mult.value.real, "im": mult.value.imag}],
                {"multiplier": mult.value, "modulus": phase.modulus, "kind": cfg.kind})
    return 0


def cmd_weyl(cfg: ExperimentConfig) -> int:
    basis = cfg.parsed_basis()
    chi = cfg.parsed_char(basis)
    rho = cfg.parsed_rho(basis, chi.r)
    rows = []
    for n in cfg.schedule([10**4]):
        value = adic_weyl_sum(chi, rho, n, cfg.source, cfg.max_modulus)
        _print_complex(f"weyl sum N={n}", value)
        rows.append({"N": n, "re": value.real, "im": value.imag, "abs": abs(value)})
    emit_report(cfg, rows, {"char": chi.spec_string(), "source": cfg.source},
                header=["N", "re", "im", "abs"])
    return 0


def _load_function(cfg: ExperimentConfig) -> CylinderFunction:
    if cfg.function is None:
        raise SystemExit("error: --function <file> is required")
    with open(cfg.function) as fh:
        return cylinder_from_dict(json.load(fh))


def cmd_average(cfg: ExperimentConfig) -> int:
    f = _load_function(cfg)
    rho = cfg.parsed_rho(f.basis, f.r)
    n = (cfg.schedule([10**4]) or [10**4])[-1]
    avg = empirical_average(f, rho, n, cfg.source, cfg.max_modulus)
    rows = [{"c": c, "re": v.real, "im": v.imag} for c, v in enumerate(avg.values)]
    emit_report(cfg, rows, {"result": cylinder_to_dict(avg), "N": n, "source": cfg.source})
    print(f"averaged {f.modulus} residues at N={n} over {cfg.source}")
    return 0


def cmd_limit(cfg: ExperimentConfig) -> int:
    f = _load_function(cfg)
    rho = cfg.parsed_rho(f.basis, f.r)
    _degree_notice(cfg, rho)
    lim = predicted_limit(f, rho, cfg.kind)
    rows = [{"c": c, "re": v.real, "im": v.imag} for c, v in enumerate(lim.values)]
    emit_report(cfg, rows, {"result": cylinder_to_dict(lim), "kind": cfg.kind})
    print(f"predicted limit over {lim.modulus} residues ({cfg.kind} kind)")
    return 0


def cmd_compare(cfg: ExperimentConfig) -> int:
    f = _load_function(cfg)
    rho = cfg.parsed_rho(f.basis, f.r)
    _degree_notice(cfg, rho)
    schedule = cfg.schedule([10**3, 10**4, 10**5])
    report = compare(f, rho, schedule, cfg.kind, cfg.max_modulus)
    rows = [{"N": n, "sup": s, "l2": l}
            for n, s, l in zip(report.n_schedule, report.sup_distances, report.l2_distances)]
    for row in rows:
        print(f"N={row['N']}: sup {_fmt(row['sup'])}  l2 {_fmt(row['l2'])}")
    emit_report(cfg, rows, {
        "sup_norm": report.sup_distances,
        "l2_norm": report.l2_distances,
        "multipliers": report.multipliers,
        "sup_nonincreasing": report.sup_nonincreasing,
    }, header=["N", "sup", "l2"])
    return 0


def cmd_torus(cfg: ExperimentConfig) -> int:
    if cfg.beta is None:
        raise SystemExit("error: --beta is required")
    beta = [[float(b) for b in comp.split(",")] for comp in cfg.beta.split(";")]
    if len(beta) == 1:
        beta = beta[0]
    freqs = [tuple(int(m) for m in part.split(",")) for part in (cfg.freqs or "1").split(";")]
    coeffs = [complex(part) for part in (cfg.coeffs or "1").split(";")]
    if len(freqs) != len(coeffs):
        raise SystemExit("error: --freqs and --coeffs must have the same length")
    trig = {f if len(f) > 1 else f[0]: c for f, c in zip(freqs, coeffs)}
    xs = tuple(float(v) for v in cfg.x.split(","))
    x = xs if len(xs) > 1 else xs[0]
    rows = []
    for n in cfg.schedule([10**4]):
        value = torus_average(trig, beta, x, n, cfg.source)
        _print_complex(f"torus average N={n}", value)
        rows.append({"N": n, "re": value.real, "im": value.imag, "abs": abs(value)})
    emit_report(cfg, rows, {"source": cfg.source}, header=["N", "re", "im", "abs"])
    return 0


def cmd_wiener(cfg: ExperimentConfig) -> int:
    basis = cfg.parsed_basis()
    if cfg.r_max is None:
        raise SystemExit("error: --r-max is required")
    rho = cfg.parsed_rho(basis, cfg.r_max)
    series = wiener_energy(basis, rho, cfg.r_max, cfg.kind)
    rows = [{"r": r, "A_r": basis.modulus(r), "W_r": w} for r, w in series]
    for row in rows:
        print(f"r={row['r']}  A_r={row['A_r']}  W_r={_fmt(row['W_r'])}")
    emit_report(cfg, rows, {"kind": cfg.kind, "series": [[r, w] for r, w in series]})
    return 0


_COMMANDS = {
    "gauss": cmd_gauss,
    "multiplier": cmd_multiplier,
    "weyl": cmd_weyl,
    "average": cmd_average,
    "limit": cmd_limit,
    "compare": cmd_compare,
    "torus": cmd_torus,
    "wiener": cmd_wiener,
}


def _n_schedule(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adicergo",
                                     description="a-adic ergodic average experiments")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON config file; flags override its values")
        p.add_argument("--basis", help="const:<c> | cycle:<c0>,... | list:<c0>,... [@offset:<k>]")
        p.add_argument("--rho", help="comma-separated integer coefficients, constant first")
        p.add_argument("--char", help="<ell>/<A> or <ell>@level:<r>")
        p.add_argument("--N", dest="n_schedule", type=_n_schedule,
                       help="comma-separated N schedule")
        p.add_argument("--source", choices=["primes", "naturals"])
        p.add_argument("--kind", choices=["prime", "natural"])
        p.add_argument("--out", help="write <out>.csv and <out>.json")
        p.add_argument("--max-modulus", dest="max_modulus", type=int)
        p.add_argument("--threads", type=int)
        if name == "gauss":
            p.add_argument("--q", type=int)
            p.add_argument("--psi", help="coefficients a1,a2,... of a1*x + a2*x^2 + ...")
        if name in ("average", "limit", "compare"):
            p.add_argument("--function", help="cylinder function JSON file")
        if name == "torus":
            p.add_argument("--beta", help="orbit coefficients, ';' between torus components")
            p.add_argument("--freqs", help="frequencies, ';' separated, ',' within a tuple")
            p.add_argument("--coeffs", help="complex coefficients, ';' separated")
            p.add_argument("--x", help="starting point")
        if name == "wiener":
            p.add_argument("--r-max", dest="r_max", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = parse_config(args)
    try:
        return _COMMANDS[args.command](cfg)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

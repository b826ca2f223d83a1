"""Command-line front end: one manifest per invocation, reproducible reports.

Every flag has an environment-variable equivalent named BETADIX_<FLAG> (dashes
become underscores); command-line values win.  Reports are byte-stable for
identical manifests, including the seed used for sampled checks.

Exit codes: 0 success, 2 hypothesis rejection (the input violates the
assumptions of the requested computation), 1 internal or unexpected error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, fields

from .counting import CountRequest, count_omitting, verify_gap_lemma
from .digits_extra import central_binomial_practical, is_practical, persistence
from .errors import BetadixError, HYPOTHESIS_CODES, NotTerminating
from .expansion import beta_expansion, cns_check, radix_expansion, render_text
from .padic import interpolate_G, lipschitz_constants, primes_above, unit_orders
from .residue import ResidueTable, digit_set, digit_set_canonical
from .ring import NumberRing, poly_from_string

_ERROR_CODES = [
    "not-monic", "reducible", "ring-mismatch", "division-by-zero",
    "norm-too-small", "not-representative", "state-budget-exceeded",
    "closure-budget-exceeded", "not-terminating", "ramified-prime",
    "not-degree-one", "precision-exhausted", "precision-mismatch",
    "out-of-domain", "not-coprime", "root-of-unity", "hypothesis-violated",
]

_EPILOG = (
    "exit codes: 0 success; 2 hypothesis rejection ("
    + ", ".join(sorted(HYPOTHESIS_CODES))
    + "); 1 internal error.\n"
    "error codes: " + ", ".join(_ERROR_CODES) + ".\n"
    "environment: every flag --foo-bar can be set via BETADIX_FOO_BAR."
)


@dataclass(frozen=True)
class ExperimentManifest:
    """Complete description of one CLI run; round-trips through JSON."""

    command: str
    ring: str = "x"
    alpha: str | None = None
    beta: str | None = None
    digits: str | None = None
    b: int | None = None
    N: int | None = None
    K: int | None = None
    u: int | None = None
    mode: str = "theorem"
    expansion_mode: str | None = None
    format: str = "json"
    seed: int | None = None
    value: str | None = None
    k: int | None = None
    l: int | None = None
    x: int | None = None
    n: int | None = None
    base: int | None = None
    upto: int | None = None
    nmax: int | None = None
    sample: int | None = None
    jobs: int = 1
    checkpoint: str | None = None
    progress: bool = False
    check_irreducible: bool = False
    central: bool = False
    hits_out: str | None = None
    out: str | None = None

    def to_dict(self):
        defaults = {f.name: f.default for f in fields(self)}
        return {
            k: v for k, v in asdict(self).items() if v != defaults[k] or k == "command"
        }

    def render(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown manifest keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def parse(cls, text):
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# manifest execution
# ---------------------------------------------------------------------------

def _ring_of(man):
    return NumberRing(
        tuple(poly_from_string(man.ring)), check_irreducible=man.check_irreducible
    )


def _dset_of(ring, beta, man):
    if man.digits:
        elems = [ring.parse(s) for s in man.digits.split(",")]
        return digit_set(ring, beta, elems)
    return digit_set_canonical(ring, beta)


def _digit_value(dset, j):
    c = dset.digits[j].coeffs
    return c[0] if len(c) == 1 else list(c)


def _require(man, *names):
    for name in names:
        if getattr(man, name) is None:
            raise ValueError(f"{man.command} requires --{name.replace('_', '-')}")


def _cmd_expand(man):
    ring = _ring_of(man)
    _require(man, "beta", "value")
    beta = ring.parse(man.beta)
    dset = _dset_of(ring, beta, man)
    table = ResidueTable(ring, beta, dset)
    value = ring.parse(man.value)
    k = man.k if man.k is not None else 16
    payload = {
        "ring": ring.to_dict(),
        "beta": list(beta.coeffs),
        "value": list(value.coeffs),
        "digit_set": dset.to_dict(),
    }
    if man.expansion_mode == "radix-only":
        try:
            word = radix_expansion(value, table)
        except NotTerminating as err:
            payload.update(
                terminates=False,
                cycle=[list(e.coeffs) for e in err.cycle],
                message=str(err),
            )
            csv = "terminates,cycle\nfalse," + ";".join(
                str(list(e.coeffs)) for e in err.cycle
            ) + "\n"
            return payload, csv
        payload.update(
            terminates=True, digits=[_digit_value(dset, j) for j in word]
        )
        csv = "i,digit\n" + "".join(
            f"{i},{_digit_value(dset, j)}\n" for i, j in enumerate(word)
        )
        return payload, csv
    exp = beta_expansion(value, table)
    payload.update(
        preperiod=[_digit_value(dset, j) for j in exp.preperiod],
        period=[_digit_value(dset, j) for j in exp.period],
        first_digits=[_digit_value(dset, j) for j in exp.prefix(k)],
        text=render_text(exp),
    )
    csv = "i,digit\n" + "".join(
        f"{i},{_digit_value(dset, j)}\n" for i, j in enumerate(exp.prefix(k))
    )
    return payload, csv


def _cmd_cns_check(man):
    ring = _ring_of(man)
    _require(man, "beta")
    beta = ring.parse(man.beta)
    verdict = cns_check(ring, beta)
    payload = {"ring": ring.to_dict(), "beta": list(beta.coeffs)}
    payload.update(verdict.to_dict())
    csv = (
        "is_cns,expansivity_ok,closure_size,witness_cycle\n"
        f"{str(verdict.is_cns).lower()},{str(verdict.expansivity_ok).lower()},"
        f"{verdict.closure_size},"
        + (
            ";".join(str(list(e.coeffs)) for e in verdict.witness_cycle)
            if verdict.witness_cycle
            else ""
        )
        + "\n"
    )
    return payload, csv


def _count_report(man):
    ring = _ring_of(man)
    _require(man, "alpha", "beta", "b", "N")
    beta = ring.parse(man.beta)
    req = CountRequest(
        ring,
        ring.parse(man.alpha),
        beta,
        _dset_of(ring, beta, man),
        man.b,
        man.N,
        mode=man.expansion_mode or "radix-only",
        strict=man.mode != "exploration",
    )
    return count_omitting(
        req, jobs=man.jobs, progress=man.progress, checkpoint_path=man.checkpoint
    )


def _cmd_count(man):
    report = _count_report(man)
    if man.hits_out:
        with open(man.hits_out, "w") as fh:
            fh.write(report.hits_text())
    return report.to_dict(), report.to_csv()


def _cmd_bound_report(man):
    report = _count_report(man)
    csv = report.to_csv()
    payload = report.to_dict()
    if man.out:
        with open(man.out, "w") as fh:
            fh.write(csv)
        payload["written"] = man.out
    return payload, csv


def _cmd_interpolate(man):
    ring = _ring_of(man)
    _require(man, "alpha", "beta", "x")
    alpha = ring.parse(man.alpha)
    beta = ring.parse(man.beta)
    K = man.K if man.K is not None else 64
    strict = man.mode != "exploration"
    models = [
        mdl
        for mdl in primes_above(ring, beta, K=K, strict=strict)
        if mdl.degree_one and mdl.unramified
    ]
    orders = unit_orders(alpha, models)
    u = man.u if man.u is not None else orders.product
    l = man.l if man.l is not None else 0
    if not 0 <= l < u:
        raise ValueError(f"--l must lie in [0, {u})")
    m0, n0 = lipschitz_constants(alpha, u, models)
    values = []
    for mdl in models:
        g = interpolate_G(alpha, l, u, man.x, mdl)
        values.append(g.to_dict())
    payload = {
        "alpha": list(alpha.coeffs),
        "beta": list(beta.coeffs),
        "u": u,
        "unit_orders": orders.to_dict(),
        "l": l,
        "x": man.x,
        "lipschitz": {"m0": m0, "n0": n0},
        "values": values,
    }
    csv = "q,K,value\n" + "".join(f"{v['q']},{v['K']},{v['value']}\n" for v in values)
    return payload, csv


def _cmd_gap_check(man):
    ring = _ring_of(man)
    _require(man, "alpha", "beta")
    alpha = ring.parse(man.alpha)
    beta = ring.parse(man.beta)
    dset = _dset_of(ring, beta, man)
    k = man.k if man.k is not None else 1
    strict = man.mode != "exploration"
    sample = None
    if man.sample:
        span = man.nmax if man.nmax is not None else 1000
        # unset seed still pins the stream: reports must be reproducible
        rng = random.Random(0 if man.seed is None else man.seed)
        sample = [
            (rng.randint(1, span), rng.randint(1, span)) for _ in range(man.sample)
        ]
        report = verify_gap_lemma(
            alpha, beta, dset, k=k, sample=sample, K=man.K or 64, strict=strict
        )
    else:
        _require(man, "nmax")
        report = verify_gap_lemma(
            alpha, beta, dset, k=k, nmax=man.nmax, K=man.K or 64, strict=strict
        )
    payload = report.to_dict()
    head = sorted(payload)
    csv = ",".join(head) + "\n" + ",".join(_csv_cell(payload[h]) for h in head) + "\n"
    return payload, csv


def _cmd_persistence(man):
    base = man.base if man.base is not None else 10
    if man.upto is not None:
        records = [persistence(i, base) for i in range(1, man.upto + 1)]
    else:
        _require(man, "n")
        records = [persistence(man.n, base)]
    payload = {"base": base, "records": [r.to_dict() for r in records]}
    csv = "n,base,l,orbit\n" + "".join(r.to_csv_row() + "\n" for r in records)
    return payload, csv


def _cmd_practical(man):
    _require(man, "n")
    payload = {"n": man.n, "practical": is_practical(man.n)}
    if man.central:
        payload["central_binomial"] = central_binomial_practical(man.n).to_dict()
    csv = f"n,practical\n{man.n},{str(payload['practical']).lower()}\n"
    return payload, csv


_COMMANDS = {
    "expand": _cmd_expand,
    "cns-check": _cmd_cns_check,
    "count": _cmd_count,
    "bound-report": _cmd_bound_report,
    "interpolate": _cmd_interpolate,
    "gap-check": _cmd_gap_check,
    "persistence": _cmd_persistence,
    "practical": _cmd_practical,
}


def _csv_cell(v):
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return '"' + json.dumps(v, sort_keys=True).replace('"', '""') + '"'
    return str(v)


def _text_render(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_render(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val)}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text_render(val, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(val)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines if indent else "\n".join(lines) + "\n"


def run(manifest, stdout=None, stderr=None):
    """Execute one manifest; writes the report and returns the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        handler = _COMMANDS.get(manifest.command)
        if handler is None:
            raise ValueError(f"unknown command {manifest.command!r}")
        payload, csv = handler(manifest)
        if manifest.format == "csv":
            out.write(csv)
        elif manifest.format == "text":
            out.write(_text_render(payload))
        else:
            out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return 0
    except BetadixError as exc:
        print(
            json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True),
            file=err,
        )
        return 2 if exc.code in HYPOTHESIS_CODES else 1
    except Exception as exc:  # argparse-level misuse or a genuine bug
        print(
            json.dumps(
                {"error": "internal", "message": f"{type(exc).__name__}: {exc}"},
                sort_keys=True,
            ),
            file=err,
        )
        return 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _env(flag, fallback=None):
    return os.environ.get("BETADIX_" + flag.upper().replace("-", "_"), fallback)


def _env_flag(flag):
    return (_env(flag) or "").lower() in ("1", "true", "yes")


def _add_common(p):
    p.add_argument("--ring", default=_env("ring", "x"),
                   help="defining polynomial, e.g. x or x^2+1 (env BETADIX_RING)")
    p.add_argument("--check-irreducible", action="store_true",
                   default=_env_flag("check-irreducible"),
                   help="verify irreducibility of the defining polynomial")
    p.add_argument("--mode", choices=["theorem", "exploration"],
                   default=_env("mode", "theorem"),
                   help="theorem mode rejects inputs outside the proved hypotheses")
    p.add_argument("--format", choices=["json", "csv", "text"],
                   default=_env("format", "json"))
    p.add_argument("--seed", type=int, default=_env("seed"))
    p.add_argument("--K", type=int, default=_env("k-precision"),
                   help="prime-model precision (env BETADIX_K_PRECISION)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="betadix",
        description="digit expansions over algebraic bases, digit-omission "
        "counts, and companion digit problems",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--manifest", help="run a saved manifest JSON file")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("expand", help="digit expansion of one element")
    _add_common(p)
    p.add_argument("--beta", default=_env("beta"))
    p.add_argument("--digits", default=_env("digits"),
                   help="comma-separated digit elements; default 0..|N(beta)|-1")
    p.add_argument("--value", default=_env("value"))
    p.add_argument("--k", type=int, default=_env("k"), help="digits to print")
    p.add_argument("--expansion-mode", choices=["radix-only", "beta-adic"],
                   default=_env("expansion-mode", "beta-adic"))

    p = sub.add_parser("cns-check", help="decide the canonical-number-system property")
    _add_common(p)
    p.add_argument("--beta", default=_env("beta"))

    for name, extra in (("count", "count exponents omitting a digit"),
                        ("bound-report", "counts, ratios and checkpoint table")):
        p = sub.add_parser(name, help=extra)
        _add_common(p)
        p.add_argument("--alpha", default=_env("alpha"))
        p.add_argument("--beta", default=_env("beta"))
        p.add_argument("--digits", default=_env("digits"))
        p.add_argument("--digit", dest="b", type=int, default=_env("digit"),
                       help="omitted digit index")
        p.add_argument("--N", type=int, default=_env("n-limit"),
                       help="exponent range 1..N (env BETADIX_N_LIMIT)")
        p.add_argument("--expansion-mode", choices=["radix-only", "beta-adic"],
                       default=_env("expansion-mode", "radix-only"))
        p.add_argument("--jobs", type=int, default=_env("jobs", "1"),
                       help="block-parallel worker count")
        p.add_argument("--checkpoint", default=_env("checkpoint"),
                       help="resumable checkpoint file (sequential runs)")
        p.add_argument("--progress", action="store_true", default=_env_flag("progress"))
        p.add_argument("--hits-out", default=_env("hits-out"),
                       help="write newline-delimited hit list to this file")
        if name == "bound-report":
            p.add_argument("--out", default=_env("out"),
                           help="also write the CSV table to this file")

    p = sub.add_parser("interpolate", help="evaluate the exponent interpolation")
    _add_common(p)
    p.add_argument("--alpha", default=_env("alpha"))
    p.add_argument("--beta", default=_env("beta"))
    p.add_argument("--l", type=int, default=_env("l"))
    p.add_argument("--x", type=int, default=_env("x"),
                   help="integer argument: value at alpha^(l + u*x)")
    p.add_argument("--u", type=int, default=_env("u"), help="override the computed u")

    p = sub.add_parser("gap-check", help="verify the exponent-gap divisibility law")
    _add_common(p)
    p.add_argument("--alpha", default=_env("alpha"))
    p.add_argument("--beta", default=_env("beta"))
    p.add_argument("--digits", default=_env("digits"))
    p.add_argument("--k", type=int, default=_env("k"), help="digit prefix length")
    p.add_argument("--nmax", type=int, default=_env("nmax"),
                   help="exhaustive exponent range (or sampling span)")
    p.add_argument("--sample", type=int, default=_env("sample"),
                   help="number of random pairs instead of exhaustive pairs")

    p = sub.add_parser("persistence", help="digit-product orbit and its length")
    _add_common(p)
    p.add_argument("--n", type=int, default=_env("n"))
    p.add_argument("--base", type=int, default=_env("base"))
    p.add_argument("--upto", type=int, default=_env("upto"),
                   help="tabulate every n up to this bound")

    p = sub.add_parser("practical", help="practicality tests")
    _add_common(p)
    p.add_argument("--n", type=int, default=_env("n"))
    p.add_argument("--central", action="store_true", default=_env_flag("central"),
                   help="also test the central binomial coefficient C(2n, n)")
    return parser


def _manifest_from_args(args):
    names = {f.name for f in fields(ExperimentManifest)}
    data = {}
    for key, val in vars(args).items():
        if key in names and val is not None:
            data[key] = val
    return ExperimentManifest(**data)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.manifest:
        with open(args.manifest) as fh:
            manifest = ExperimentManifest.parse(fh.read())
    elif args.command:
        manifest = _manifest_from_args(args)
    else:
        parser.print_help()
        return 2
    return run(manifest)


if __name__ == "__main__":
    sys.exit(main())

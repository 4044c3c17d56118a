"""Command line: transition matrices, decomposition multiplicities and the verification suites.

Exit codes: 0 when every check passes (or is skipped), 1 on any failure,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, iqmod


def _latex_array(header, rows):
    cols = "c" * len(header)
    lines = [r"\begin{array}{" + cols + "}", " & ".join(header) + r" \\", r"\hline"]
    lines += [" & ".join(r) + r" \\" for r in rows]
    lines.append(r"\end{array}")
    return "\n".join(lines)


def _text_table(header, rows):
    table = [header] + rows
    widths = [max(len(r[k]) for r in table) for k in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table)


def icanon_table(l, fmt):
    """Standard-to-icanonical transition matrix: column n holds b^(n) eta."""
    mat = iqmod.transition_matrix(l)
    if fmt == "json":
        # rows indexed by the standard vector, columns by the canonical vector
        return json.dumps({
            "l": l,
            "rows": [f"f^({m})eta" for m in range(l + 1)],
            "cols": [f"b^({n})eta" for n in range(l + 1)],
            "matrix": [[mat[n][m].to_json() for n in range(l + 1)] for m in range(l + 1)],
        })
    if fmt == "latex":
        header = [""] + [f"b^{{({n})}}\\eta" for n in range(l + 1)]
        rows = [[f"f^{{({m})}}\\eta"] + [mat[n][m].to_latex() for n in range(l + 1)]
                for m in range(l + 1)]
        return _latex_array(header, rows)
    header = [""] + [f"b^({n})eta" for n in range(l + 1)]
    rows = [[f"f^({m})eta"] + [mat[n][m].to_str() for n in range(l + 1)] for m in range(l + 1)]
    return _text_table(header, rows)


def decompose_table(l, n, fmt):
    """Graded multiplicity of each indecomposable summand B^[m] in B^(tensor n)."""
    mult = checks.decomposition(l, n)
    if fmt == "json":
        return json.dumps({"l": l, "n": n,
                           "multiplicities": {str(m): c.to_json() for m, c in enumerate(mult) if c}})
    rows = [(m, c) for m, c in enumerate(mult) if c]
    if fmt == "latex":
        return _latex_array(["m", "\\text{multiplicity}"], [[str(m), c.to_latex()] for m, c in rows])
    return _text_table(["m", "multiplicity"], [[str(m), c.to_str()] for m, c in rows])


def _report_text(rep):
    lines = [f"suite {rep['suite']}  l={rep['l']}  {rep['elapsed_ms']} ms"]
    for c in rep["checks"]:
        line = f"  [{c['status']}] {c['name']}"
        if c.get("witness") is not None:
            line += f"  witness: {c['witness']}"
        lines.append(line)
    return "\n".join(lines)


def _report_latex(rep):
    rows = [[c["name"].replace("_", r"\_"), c["status"]] for c in rep["checks"]]
    header = [f"\\text{{{rep['suite']}, }} l={rep['l']}", ""]
    return _latex_array(header, [[f"\\text{{{a}}}", f"\\text{{{b}}}"] for a, b in rows])


def verify(suite, l, seed, fmt):
    names = list(checks.SUITES) if suite == "all" else [suite]
    reports = [checks.run_suite(name, l, seed) for name in names]
    failed = any(c["status"] == "fail" for r in reports for c in r["checks"])
    if fmt == "json":
        text = json.dumps(reports[0] if suite != "all" else reports)
    elif fmt == "latex":
        text = "\n\n".join(_report_latex(r) for r in reports)
    else:
        text = "\n".join(_report_text(r) for r in reports)
    return text, 1 if failed else 0


def _parser():
    p = argparse.ArgumentParser(prog="artifact", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--l", type=int, required=True, help="level l >= 0")
        sp.add_argument("--format", choices=["json", "latex", "text"], default="text")
        sp.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("icanon", help="standard to icanonical transition matrix"))
    sp = sub.add_parser("decompose", help="multiplicities of B^[m] in the n-th tensor power")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=sorted(checks.SUITES) + ["all"], default="all")
    return p


def main(argv=None):
    p = _parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if args.l < 0:
        p.print_usage(sys.stderr)
        print("artifact: error: --l must be >= 0", file=sys.stderr)
        return 2
    if args.cmd == "icanon":
        print(icanon_table(args.l, args.format))
        return 0
    if args.cmd == "decompose":
        if args.n < 0:
            print("artifact: error: --n must be >= 0", file=sys.stderr)
            return 2
        print(decompose_table(args.l, args.n, args.format))
        return 0
    text, code = verify(args.suite, args.l, args.seed, args.format)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

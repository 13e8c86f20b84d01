#!/usr/bin/env python3
"""Regenerate the bundled b-file fixtures.

Each sequence is rebuilt from its defining formula with sympy, deliberately
not through orderpoly, so the fixtures stay an independent reference.
Triangles and arrays are flattened row by row; the layout is recorded in
the header comments.

    python tools/make_fixtures.py src/orderpoly/fixtures
"""

import sys
from pathlib import Path

from sympy import Rational, binomial, factorial
from sympy.functions.combinatorial.numbers import stirling


def write(outdir, ident, offset, values, notes=()):
    lines = [f"# {ident} offset={offset}"]
    lines += [f"# {note}" for note in notes]
    lines += [f"{offset + i} {int(v)}" for i, v in enumerate(values)]
    (outdir / f"{ident}.txt").write_text("\n".join(lines) + "\n")


def box3(a, b, c):
    # MacMahon's triple product for plane partitions in an a x b x c box
    value = Rational(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for l in range(1, c + 1):
                value *= Rational(i + j + l - 1, i + j + l - 2)
    assert value.q == 1
    return value


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    write(outdir, "A000027", 1, range(1, 41), ["a(n) = n"])
    write(outdir, "A000217", 0, [n * (n + 1) // 2 for n in range(41)], ["a(n) = n(n+1)/2"])
    write(outdir, "A000292", 0, [binomial(n + 2, 3) for n in range(41)], ["a(n) = C(n+2,3)"])
    write(outdir, "A000330", 0, [n * (n + 1) * (2 * n + 1) // 6 for n in range(41)],
          ["a(n) = n(n+1)(2n+1)/6"])
    write(outdir, "A002415", 0, [n * n * (n * n - 1) // 12 for n in range(41)],
          ["a(n) = n^2(n^2-1)/12"])
    write(outdir, "A006542", 4, [binomial(n, 3) * binomial(n - 1, 3) / 4 for n in range(4, 41)],
          ["a(n) = C(n,3)C(n-1,3)/4"])
    write(outdir, "A006858", 1,
          [factorial(n + 2) * factorial(2 * n + 3) / (factorial(n) * factorial(2 * n - 1) * 6 * 120)
           for n in range(1, 31)],
          ["a(n) = (n+2)!(2n+3)!/(n!(2n-1)!3!5!)"])
    write(outdir, "A047819", 0, [box3(3, 3, n) for n in range(25)],
          ["plane partitions in a 3 x 3 x n box (MacMahon triple product)"])
    write(outdir, "A001296", 0, [stirling(n + 2, n) for n in range(31)], ["a(n) = S2(n+2, n)"])
    write(outdir, "A001297", 0, [stirling(n + 3, n) for n in range(31)], ["a(n) = S2(n+3, n)"])
    write(outdir, "A001298", 0, [stirling(n + 4, n) for n in range(31)], ["a(n) = S2(n+4, n)"])

    # Narayana triangle, rows n = 1..15, T(n,k) = C(n,k)C(n,k-1)/n
    nar = [binomial(n, k) * binomial(n, k - 1) / n for n in range(1, 16) for k in range(1, n + 1)]
    write(outdir, "A001263", 1, nar, ["triangle T(n,k), n >= 1, 1 <= k <= n, read by rows",
                                     "T(n,k) = C(n,k)C(n,k-1)/n"])

    # C(n,k)^2, rows n = 0..14
    write(outdir, "A008459", 0, [binomial(n, k) ** 2 for n in range(15) for k in range(n + 1)],
          ["triangle T(n,k) = C(n,k)^2, n >= 0, 0 <= k <= n, read by rows"])

    # Eulerian numbers, rows n = 1..12
    eul = [sum((-1) ** j * binomial(n + 1, j) * (k - j) ** n for j in range(k + 1))
           for n in range(1, 13) for k in range(1, n + 1)]
    write(outdir, "A008292", 1, eul, ["triangle T(n,k), n >= 1, 1 <= k <= n, read by rows",
                                     "T(n,k) = sum_j (-1)^j C(n+1,j)(k-j)^n"])

    # second-order Eulerian triangle from sum_n S2(n+k,n) x^n = sum_i T(k,i) x^i / (1-x)^(2k+1)
    rows = []
    for k in range(1, 11):
        row = []
        for i in range(1, k + 1):
            row.append(sum((-1) ** j * binomial(2 * k + 1, j) * stirling(i - j + k, i - j)
                           for j in range(i + 1)))
        rows.append(row)
    assert rows[:6] == [[1], [1, 2], [1, 8, 6], [1, 22, 58, 24], [1, 52, 328, 444, 120],
                        [1, 114, 1452, 4400, 3708, 720]]
    write(outdir, "A008517", 1, [v for row in rows for v in row],
          ["triangle T(n,k), n >= 1, 1 <= k <= n, read by rows",
           "numerators of sum_m S2(m+n,m) x^m over (1-x)^(2n+1)"])

    # column 12 of the Narayana triangle: N(n+12, 12)
    write(outdir, "A140934", 0,
          [binomial(n + 12, 12) * binomial(n + 12, 11) / (n + 12) for n in range(30)],
          ["a(n) = C(n+12,12)C(n+12,11)/(n+12)"])

    write(outdir, "A101093", 1,
          [sum(sum(i ** 6 for i in range(1, m + 1)) for m in range(1, n + 1)) for n in range(1, 31)],
          ["second partial sums of sixth powers"])

    # <k,n,k> hexagon tilings as an array, rows k = 1..6, columns n = 0..9
    write(outdir, "A103905", 0, [box3(k, n, k) for k in range(1, 7) for n in range(10)],
          ["array T(k,n) = tilings of the <k,n,k> hexagon",
           "layout: rows k = 1..6, columns n = 0..9, index = 10*(k-1) + n"])

    # Kreweras-Niederhausen array, rows k = 0..6, columns n = 0..9
    kn = [factorial(n + k + 1) * factorial(2 * n + 2 * k + 1)
          / (factorial(n + 1) * factorial(2 * n + 1) * factorial(k + 1) * factorial(2 * k + 1))
          for k in range(7) for n in range(10)]
    write(outdir, "A111910", 0, kn,
          ["array T(k,n) = (n+k+1)!(2n+2k+1)!/((n+1)!(2n+1)!(k+1)!(2k+1)!)",
           "layout: rows k = 0..6, columns n = 0..9, index = 10*k + n"])


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/orderpoly/fixtures")

#!/usr/bin/env python3
"""Generate Taylor coefficients of the Riemann-Siegel correction terms C0..C4.

Psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p) is expanded in x = p - 1/2
as a power series (exact series arithmetic at high precision), then the
corrections are assembled from its derivatives:

  C0 = Psi
  C1 = -Psi^(3) / (96 pi^2)
  C2 =  Psi^(2) / (64 pi^2) + Psi^(6) / (18432 pi^4)
  C3 = -Psi^(1) / (64 pi^2) - Psi^(5) / (3840 pi^4) - Psi^(9) / (5308416 pi^6)
  C4 =  Psi / (128 pi^2) + 19 Psi^(4) / (24576 pi^4)
        + 11 Psi^(8) / (5898240 pi^6) + Psi^(12) / (2038431744 pi^8)

Output: src/zeta/rs_coefficients.inc (coefficients in powers of x, trimmed
once |coef| * 0.5^j drops below a per-term threshold; C_k is weighted by
(t / 2 pi)^(-k/2) <= 31.8^(-k/2) for t >= 200, so later terms need fewer digits).
"""
import sys
import mpmath as mp

mp.mp.dps = 200
DEG = 110


def series_cos_sin_of_quadratic(a):
    """cos(a x^2) and sin(a x^2) as power series in x up to DEG."""
    c = [mp.mpf(0)] * (DEG + 1)
    s = [mp.mpf(0)] * (DEG + 1)
    m = 0
    while 2 * m <= DEG:
        term = a ** m / mp.factorial(m)
        if m % 4 == 0:
            c[2 * m] = term
        elif m % 4 == 1:
            s[2 * m] = term
        elif m % 4 == 2:
            c[2 * m] = -term
        else:
            s[2 * m] = -term
        m += 1
    return c, s


def series_cos_linear(b):
    out = [mp.mpf(0)] * (DEG + 1)
    for j in range(0, DEG + 1, 2):
        out[j] = (-1) ** (j // 2) * b ** j / mp.factorial(j)
    return out


def divide(num, den):
    q = [mp.mpf(0)] * (DEG + 1)
    for j in range(DEG + 1):
        acc = num[j]
        for i in range(j):
            acc -= q[i] * den[j - i]
        q[j] = acc / den[0]
    return q


def deriv(series, m):
    out = list(series)
    for _ in range(m):
        out = [out[j + 1] * (j + 1) for j in range(len(out) - 1)] + [mp.mpf(0)]
    return out


def combo(terms):
    out = [mp.mpf(0)] * (DEG + 1)
    for coef, ser in terms:
        for j in range(DEG + 1):
            out[j] += coef * ser[j]
    return out


def main(path):
    pi = mp.pi
    # Psi = -cos(2 pi x^2 - 5 pi / 8) / cos(2 pi x),  x = p - 1/2
    c2, s2 = series_cos_sin_of_quadratic(2 * pi)
    num = [-(mp.cos(5 * pi / 8) * c2[j] + mp.sin(5 * pi / 8) * s2[j]) for j in range(DEG + 1)]
    den = series_cos_linear(2 * pi)
    psi = divide(num, den)
    d = {m: deriv(psi, m) for m in range(13)}
    cs = [
        psi,
        combo([(-1 / (96 * pi**2), d[3])]),
        combo([(1 / (64 * pi**2), d[2]), (1 / (18432 * pi**4), d[6])]),
        combo([(-1 / (64 * pi**2), d[1]), (-1 / (3840 * pi**4), d[5]),
               (-1 / (5308416 * pi**6), d[9])]),
        combo([(1 / (128 * pi**2), d[0]), (mp.mpf(19) / (24576 * pi**4), d[4]),
               (mp.mpf(11) / (5898240 * pi**6), d[8]),
               (1 / (2038431744 * pi**8), d[12])]),
    ]
    # sanity: direct evaluation of Psi at a few points
    for p in (mp.mpf('0.1'), mp.mpf('0.3'), mp.mpf('0.9')):
        direct = mp.cos(2 * pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * pi * p)
        x = p - mp.mpf('0.5')
        ser = sum(psi[j] * x**j for j in range(DEG + 1))
        assert abs(direct - ser) < mp.mpf('1e-30'), (p, direct, ser)

    lines = ["// Generated by tools/gen/gen_rs_coefficients.py; do not edit.",
             "// Taylor coefficients of the Riemann-Siegel corrections C0..C4 in",
             "// powers of (p - 1/2), p = frac(sqrt(t / 2 pi)).", ""]
    thresholds = ['1e-18', '1e-17', '1e-16', '1e-15', '1e-14']
    for k, ser in enumerate(cs):
        last = 0
        for j in range(DEG + 1):
            if abs(ser[j]) * mp.mpf('0.5') ** j > mp.mpf(thresholds[k]):
                last = j
        vals = [mp.nstr(ser[j], 20, min_fixed=0, max_fixed=0) for j in range(last + 1)]
        lines.append(f"inline constexpr std::array<double, {last + 1}> kRsC{k} = {{")
        for v in vals:
            lines.append(f"    {v},")
        lines.append("};")
        lines.append("")
    with open(path, "w") as f:
        f.write("\n".join(lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "rs_coefficients.inc")

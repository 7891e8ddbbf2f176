# Independent oracles for the classification-report and Giacomini-White
# fixtures in tests/unit/metrics_test.cpp and tests/unit/evaluation_test.cpp.
import numpy as np
from scipy import stats
from sklearn.metrics import f1_score

gold = [-1, -1, -1, 0, 0, 0, 1, 1, 1]
pred = [-1, 0, 1, 0, 0, -1, 1, 0, 1]
print("per-class F1", f1_score(gold, pred, labels=[-1, 0, 1], average=None, zero_division=0))
print("weighted F1", repr(f1_score(gold, pred, labels=[-1, 0, 1], average="weighted", zero_division=0)))

ea = np.array([0.9, -1.2, 0.4, 1.5, -0.3, 0.8, -2.1, 0.6, 1.1, -0.5, 0.2, -1.4])
eb = np.array([0.7, -0.9, 0.6, 1.1, -0.2, 1.0, -1.6, 0.4, 0.9, -0.8, 0.1, -1.0])
d = ea ** 2 - eb ** 2
n = len(d)
dbar = d.mean()
g0 = ((d - dbar) ** 2).mean()
stat = n * dbar ** 2 / g0
print("uncond stat", repr(stat), "p", repr(stats.chi2.sf(stat, 1)))
# Bartlett, truncation lag 2
lrv = g0
for j in (1, 2):
    gj = ((d[j:] - dbar) * (d[:-j] - dbar)).sum() / n
    lrv += 2 * (1 - j / 3) * gj
stat2 = n * dbar ** 2 / lrv
print("uncond lag2 stat", repr(stat2), "p", repr(stats.chi2.sf(stat2, 1)))
# conditional, instruments (1, d_{t-1}); regress unit constant on Z_t = h_{t-1} d_t
Z = np.column_stack([d[1:], d[:-1] * d[1:]])
T = Z.shape[0]
ones = np.ones(T)
coef, *_ = np.linalg.lstsq(Z, ones, rcond=None)
fitted = Z @ coef
r2u = (fitted @ fitted) / (ones @ ones)
stat3 = T * r2u
print("cond stat", repr(stat3), "p", repr(stats.chi2.sf(stat3, 2)))

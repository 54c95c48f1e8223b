"""Mean squares on vertical lines versus their asymptotic predictions.

The pipeline: a shared dyadically snapped Simpson grid evaluates
int_1^T |zeta(sigma+it, a)|^2 dt at several T in one pass, the prediction
model supplies the leading terms for the branch at hand, and the residual
report checks that the measured/predicted ratio settles toward 1 with the
expected error decay.
"""

from zetaline.meanvalue import (
    MeanSquareRequest,
    mean_square_grid,
    predict_multi_mean_square,
    residual_report,
)

T_GRID = (250.0, 500.0, 1000.0, 2000.0)

for sigma, label in ((0.5, "critical line"), (0.75, "right of it"),
                     (0.25, "left of it")):
    req = MeanSquareRequest(kind="hurwitz", sigma=sigma, a=1.0, T=T_GRID[-1])
    measured = mean_square_grid(req, T_GRID)
    pred = predict_multi_mean_square(1, sigma, 1.0)
    rep = residual_report(measured, pred)

    print(f"sigma = {sigma}  ({label}; prediction branch: {pred.branch})")
    print("      T        measured       predicted    ratio")
    for T_eff, res in measured:
        p = pred.value_at(T_eff)
        print(f"  {T_eff:7.1f}  {res.value:14.4f}  {p:14.4f}  {res.value / p:.4f}")
    print(f"  residual exponent fit: {rep.fitted_exponent:+.3f} "
          f"(allowed {pred.error_exponent:+.3f} + 0.15)  -> passed={rep.passed}")
    print()

# the rank-2 critical line sits at sigma = 1.5
req = MeanSquareRequest(kind="multi_hurwitz", sigma=1.5, a=1.0, r=2, T=1000.0)
measured = mean_square_grid(req, (250.0, 500.0, 1000.0))
pred = predict_multi_mean_square(2, 1.5, 1.0)
print("rank 2, sigma = 1.5 (its critical line)")
for T_eff, res in measured:
    print(f"  T={T_eff:7.1f}  ratio to T log T + c T prediction: "
          f"{res.value / pred.value_at(T_eff):.4f}")

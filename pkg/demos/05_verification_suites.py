"""Run every verification sweep and show the verdict table.

Each suite records the worst constant it observed against a generous
threshold and writes CSV + JSON artifacts.  One suite fails by design:
the damped oscillatory integral I(T) tends to a nonzero constant, so the
normalized product |I(T)| sqrt(T) log T grows instead of staying bounded;
the artifact keeps the measured products so the growth rate can be read
off directly.
"""

import tempfile

from zetaline.verify import (
    coefficient_identity_suite,
    default_verification_suites,
    functional_equation_suite,
)

with tempfile.TemporaryDirectory() as out:
    records = [
        coefficient_identity_suite(out_dir=out),
        functional_equation_suite(out_dir=out),
    ] + default_verification_suites(out_dir=out)

    width = max(len(r.suite) for r in records)
    for rec in records:
        status = "PASS" if rec.passed else "FAIL"
        print(f"{status}  {rec.suite:<{width}}  observed {rec.observed_constant:12.6g}"
              f"  threshold {rec.threshold:g}")
        if not rec.passed:
            for key, val in rec.details:
                print(f"      {key} = {val:.4f}")
    print()
    print(f"artifacts written: {sum(len(r.artifacts) for r in records)} files")

"""Numerical tolerances shared by every module.

Change a value here, not at the call site.
"""

# linear algebra
HERMITIAN_TOL = 1e-12          # max |a - a^H| entry accepted by the eigensolver
JACOBI_OFF_TOL = 1e-14         # off-diagonal Frobenius norm, relative to ||A||_F
JACOBI_MAX_SWEEPS = 200
SVD_ORTH_TOL = 1e-15           # |<y_p, y_q>| / (||y_p|| ||y_q||) below which a pair is orthogonal
NEGATIVE_CLAMP = 1e-10         # values in [-NEGATIVE_CLAMP, 0) are rounding noise

# thermodynamics
EXP_GUARD = 700.0              # largest |beta * energy| passed to exp() unshifted

# classification and sweeps
BOUNDARY_TOL = 1e-12           # absolute slack on the ground-state case inequalities
DEGENERACY_TOL = 1e-9          # numeric level-crossing detection (oracle side)
ZERO_CONCURRENCE = 1e-12       # C at or below this counts as zero when bracketing T_c
TC_T_MIN = 1e-3
TC_SCAN_POINTS = 64

"""Central table of numerical tolerances.

Every module compares floating-point quantities against the constants
defined here; none defines its own tolerance locally.
"""

# Unit-norm slack for stored rays: | <r|r> - 1 | <= NORM_EPS.
NORM_EPS = 1e-10

# Projective ray equality: |<r1|r2>| >= 1 - RAY_EQ_EPS means "same ray".
RAY_EQ_EPS = 1e-9

# Declared orthogonality must hold to this: |<a|b>| < ORTH_EPS.
ORTH_EPS = 1e-9

# Gram modulus within TIE_EPS of a threshold counts as "<= threshold".
TIE_EPS = 1e-9

# Contextuality verdict margin: positive verdict iff M < lambda_min - SPECTRAL_GAP_EPS.
SPECTRAL_GAP_EPS = 1e-9

# Maximum |A[i][j] - conj(A[j][i])| for a matrix accepted as Hermitian.
HERMITIAN_DEFECT = 1e-12

# Eigensolver convergence: Frobenius norm of the off-diagonal part.
JACOBI_OFFDIAG = 1e-12

# Requested accuracy of individual eigenvalues.
EIGENVALUE_EPS = 1e-9

# Eigenvalue-sum versus ray-count consistency check.
TRACE_EPS = 1e-8

# Chain overlap |<e_k+|e_k->| versus its target threshold value.
CHAIN_EPS = 1e-8

# Elementwise tolerance for operator identities (C = 2n*I and friends).
OPERATOR_EPS = 1e-8

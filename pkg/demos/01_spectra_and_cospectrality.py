"""
Spectral decompositions, eigenvalue supports, strong cospectrality
==================================================================

Every quantity in this package flows through one object: the decomposition
of a symmetric walk matrix into distinct eigenvalues and orthogonal
eigenprojectors. This script builds a few small graphs and inspects that
decomposition directly.
"""

import numpy as np

from coronawalk import (
    build_named,
    eigendecompose,
    eigenvalue_support,
    laplacian,
    reconstruct,
    strongly_cospectral,
)

# The path on three vertices: Laplacian eigenvalues 0, 1, 3.
p3 = build_named("path", 3)
d = eigendecompose(laplacian(p3))
print("P3 Laplacian eigenvalues:", np.round(d.eigenvalues, 12))
print("multiplicities:          ", d.multiplicities)

# The projectors resolve the identity and rebuild the Laplacian exactly.
print("sum of projectors == I:  ", np.allclose(np.sum(d.projectors, axis=0), np.eye(3)))
print("reconstruction error:    ", np.max(np.abs(reconstruct(d) - laplacian(p3))))

# Eigenvalue support: which eigenvalues "see" a given vertex. The weights
# are the diagonal projector entries and always sum to 1.
for vertex in (0, 1):
    info = eigenvalue_support(d, vertex)
    print(f"support of vertex {vertex}: indices {info.support}, weights {np.round(info.weights, 6)}")

# The center of P3 is annihilated by the eigenvalue-1 projector (its
# eigenvector is odd under the end-swap), so its support is smaller.

# Strong cospectrality is the pairwise refinement: F e_u = +/- F e_v for
# every eigenprojector F. The two endpoints of P3 satisfy it.
report = strongly_cospectral(d, 0, 2)
print("P3 endpoints strongly cospectral:", report.strongly_cospectral, "signs:", report.signs)

# The same question fails on K3 even though all vertices look alike: the
# two-dimensional eigenspace mixes e_0 and e_1 without a single sign.
k3 = build_named("complete", 3)
report = strongly_cospectral(eigendecompose(laplacian(k3)), 0, 1)
print("K3 pair strongly cospectral:     ", report.strongly_cospectral)

# Hypercubes are the classic strongly cospectral family: any vertex with
# its antipode. For Q3 the antipode of 0 is 7.
q3 = build_named("hypercube", 3)
report = strongly_cospectral(eigendecompose(laplacian(q3)), 0, 7)
print("Q3 antipodal pair:               ", report.strongly_cospectral, "signs:", report.signs)

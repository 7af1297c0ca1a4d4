"""Vector bundles over the projective line as transition matrices.

A bundle is an invertible matrix g over K(u) relating the standard Laurent
lattice to an O_S-lattice.  Two matrices give isomorphic bundles exactly
when they lie in the same GL(O_S) x GL(O_V) double coset, so a bundle here
is nothing but its transition matrix modulo those unit groups.  The
splitting type is computed through the certified normal form; the sign
convention is fixed by the rank-one case, where the twist-n line bundle
has transition (u-1)**(-n).
"""

from __future__ import annotations

from .linalg import Matrix
from .splitting import grothendieck_normal_form, section_space


class InternalMismatchError(AssertionError):
    """The two independent section-count routes disagree: a genuine bug."""


class NoInvolutionError(ValueError):
    """The bundle's field carries no semilinear involution."""


class BundleP1:
    """A vector bundle over the projective line with structure field K."""

    def __init__(self, R, transition, iota=None):
        self.R = R
        self.g = transition if isinstance(transition, Matrix) else Matrix(
            R, transition)
        if self.g.m != self.g.n:
            raise ValueError("transition matrix must be square")
        self.iota = iota
        self._splitting = None

    @property
    def rank(self):
        return self.g.n

    def degree(self):
        d = self.g.det()
        return self.R.val0(d) + self.R.val_inf(d)

    def splitting_type(self):
        """Twists of the line-bundle summands, sorted descending."""
        if self._splitting is None:
            cert = grothendieck_normal_form(self.R, self.g)
            self._splitting = sorted((-k for k in cert.exponents),
                                     reverse=True)
        return self._splitting

    def sections_dim(self):
        """Dimension of the space of global sections over K.

        Computed twice: from the splitting type as sum of max(1 + k, 0),
        and directly as the solution space of the integrality conditions.
        A mismatch means an implementation bug.
        """
        ks = self.splitting_type()
        by_formula = sum(max(1 + k, 0) for k in ks)
        by_solve = len(self.sections_basis())
        if by_formula != by_solve:
            raise InternalMismatchError(
                f"section count mismatch: formula {by_formula}, "
                f"direct solve {by_solve}")
        return by_formula

    def sections_basis(self):
        """K-basis of the global sections in O_V-lattice coordinates."""
        return section_space(self.R, self.g, 0)

    def dual(self):
        return BundleP1(self.R, self.g.transpose().inverse(), self.iota)

    def direct_sum(self, other):
        return BundleP1(self.R, Matrix.block_diag(self.R, [self.g, other.g]),
                        self.iota)

    def tensor(self, other):
        return BundleP1(self.R, self.g.kronecker(other.g), self.iota)

    def twist_conjugate(self):
        """The bundle with every transition entry moved through iota."""
        if self.iota is None:
            raise NoInvolutionError("no semilinear involution attached")
        return BundleP1(self.R, self.g.map(self.iota), self.iota)

    def __repr__(self):
        return f"BundleP1(rank {self.rank} over {self.R.name})"


def line_bundle(R, n, iota=None):
    """The twist-n line bundle: transition (u-1)**(-n)."""
    return BundleP1(R, [[R.u_minus_1() ** (-n)]], iota)

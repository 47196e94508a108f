"""sodcert — exact verification of an equivariant derived-category identification.

The package recomputes, in exact arithmetic, every ingredient of the
identification between the invariant part of the derived category of an
order-3 symmetric cubic fourfold and the derived category of a product of two
elliptic curves:

* ``chars`` — character arithmetic for a cyclic group Z/r and extraction of
  invariant dimensions from character multisets;
* ``equivariant_cohomology`` — character-graded cohomology of line bundles on
  projective spaces with diagonal cyclic actions, on hypersurfaces cut out by
  character-homogeneous forms, and on P^2 x P^2 via the Kunneth rule;
* ``pushforward`` — restriction degrees of the nine descended line bundles on
  the three test curves, and the resulting divisor table (a, b, c);
* ``sod_engine`` — a rewrite engine on semiorthogonal decompositions whose
  rules (Serre rotation, orthogonal swap, block mutation) only fire when a
  computed Ext-vanishing certificate validates the side condition;
* ``geometry_charts`` — exact polynomial algebra for the 18 blow-up charts,
  quotient invariant rings, the chart-by-chart isomorphism check, finite-field
  smoothness evidence, and ramification orders;
* ``cli`` — command-line surface and machine-readable exports.
"""

__version__ = "0.1.0"

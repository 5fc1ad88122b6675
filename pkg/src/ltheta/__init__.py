"""Exact algebra for the operator graphs L_theta: the matrix algebras M_theta,
the quotients A_theta of the group algebra of (Z + Z_2) x| Z_2, their
representations, Ext groups, 2-dimensional moduli and the Klein dephasing
channel.  All arithmetic is exact over the Gaussian rationals Q(i).
"""

__version__ = "0.1.0"

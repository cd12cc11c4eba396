"""hardylab: a numerical laboratory for Hardy's Z function, its power
moments, and the modified Mellin transforms built from them, with every
transform identity verified against independent oracles at desk scale."""

__version__ = "0.1.0"

"""dinfty-cluster: exact Hom/Ext combinatorics for the cluster category of the D-infinity zigzag quiver."""

__version__ = "0.1.0"

from matrices.base_matrix import RegionMatrix, delete_marked
from matrices.labels import ClaspDiagonal, LabelMatrix, build_K, clasp_diagonal, label_product
from matrices.tau import RealSymMatrix, SymbolicSymMatrix, build_tau_numeric, build_tau_symbolic, tau_local

__all__ = [
    "RegionMatrix", "delete_marked",
    "ClaspDiagonal", "LabelMatrix", "build_K", "clasp_diagonal", "label_product",
    "RealSymMatrix", "SymbolicSymMatrix", "build_tau_numeric", "build_tau_symbolic", "tau_local",
]

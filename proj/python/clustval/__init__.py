try:
    from ._clustval import (
        Clustering,
        DissimilarityMatrix,
        ValidationError,
        adjusted_rand,
        compare,
        index_ids,
        kmeans,
        linkage,
        pam,
        profile,
        stupid_kcentroids,
        stupid_nn,
    )
except ImportError:  # in-tree builds leave the module next to the package
    from _clustval import (
        Clustering,
        DissimilarityMatrix,
        ValidationError,
        adjusted_rand,
        compare,
        index_ids,
        kmeans,
        linkage,
        pam,
        profile,
        stupid_kcentroids,
        stupid_nn,
    )

__all__ = [
    "Clustering",
    "DissimilarityMatrix",
    "ValidationError",
    "adjusted_rand",
    "compare",
    "index_ids",
    "kmeans",
    "linkage",
    "pam",
    "profile",
    "stupid_kcentroids",
    "stupid_nn",
]

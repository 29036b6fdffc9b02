"""Triangulations of cyclic polytopes under the higher Stasheff-Tamari orders,
read through the tilting theory of the higher Auslander algebras A_n^d."""
from .combinat import IndexSetKind, enumerate_index_set, intertwines, is_compatible_collection
from .errors import ContractViolation, IntegrityError, ResourceGuardError
from .orders import (
    TriangulationPoset,
    build_poset,
    enumerate_triangulations,
    hasse,
    hst2_leq,
    is_lattice,
    orders_coincide,
    submersion_set,
)
from .polytope import FacetClass, PolytopeSpec, classify_facet, enumerate_facets, geometric_facet_oracle
from .triangulation import Side, Triangulation, boundary_triangulation, increasing_flips, is_triangulation

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoized enumeration, so the next call starts cold."""
    from . import orders, polytope, reptheory, triangulation

    for fn in (
        polytope.enumerate_facets,
        polytope._facet_sets,
        polytope.internal_simplices,
        polytope.lower_facet_faces,
        polytope.total_volume,
        reptheory.universe,
        triangulation._tuple_index,
        orders._build_poset,
    ):
        fn.cache_clear()
    orders._cache.clear()
    reptheory._green_cache.clear()
    reptheory._green_poset_cache.clear()

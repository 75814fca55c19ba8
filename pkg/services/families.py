"""One entry point for building every graph family and reporting on it."""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from pydantic import BaseModel

from config import WorkbenchSettings
from models import GraphFamily, PropertyReport
from services.dn import build_dn_graph, dn_report
from services.errors import InvalidInput
from services.graph import LabeledGraph, SearchBudget, check_oracle_cap, graph_report
from services.product import ProductDims, build_product_graph, build_product_type_graph, product_report
from services.theorems import zn_report
from services.zn import build_ring_graph, build_type_graph

logger = logging.getLogger(__name__)


@dataclass
class FamilyGraph:
    family: GraphFamily
    graph: LabeledGraph
    closed_form: BaseModel
    identity: Dict[str, Any] = field(default_factory=dict)


class GraphFamilyService:
    def __init__(self, settings: Optional[WorkbenchSettings] = None):
        self.settings = settings or WorkbenchSettings()
        self.survey_builders: Dict[str, Callable[[int], LabeledGraph]] = {
            "ring": lambda n: self.ring(n).graph,
            "poset": lambda n: self.poset(n).graph,
        }

    def with_settings(self, settings: WorkbenchSettings) -> "GraphFamilyService":
        return GraphFamilyService(settings)

    def ring(self, n: int) -> FamilyGraph:
        g = build_ring_graph(n, self.settings.construction_cap).graph
        return FamilyGraph(GraphFamily.RING, g, zn_report(n), {"n": n})

    def product(self, dims: ProductDims) -> FamilyGraph:
        g = build_product_graph(dims, self.settings.construction_cap)
        return FamilyGraph(GraphFamily.PRODUCT, g, product_report(dims), {"dims": dims.dims})

    def typegraph(self, dims: ProductDims, strong: bool = False) -> FamilyGraph:
        """Type graph of Z_n for a single dim, else of the product"""
        if dims.k == 1:
            n = dims.dims[0]
            g = build_type_graph(n, strong=strong)
            return FamilyGraph(GraphFamily.TYPEGRAPH, g, zn_report(n), {"n": n, "strong": strong})
        g = build_product_type_graph(dims, strong=strong, cap=self.settings.construction_cap)
        return FamilyGraph(
            GraphFamily.TYPEGRAPH, g, product_report(dims), {"dims": dims.dims, "strong": strong}
        )

    def poset(self, n: int) -> FamilyGraph:
        g = build_dn_graph(n, self.settings.construction_cap).graph
        return FamilyGraph(GraphFamily.POSET, g, dn_report(n), {"n": n})

    def report(self, g: LabeledGraph) -> PropertyReport:
        """
        Oracle properties of g under the oracle cap and a fresh budget.

        Looped graphs only get chromatic_number, which is undefined for them.
        """
        check_oracle_cap(g, self.settings.oracle_cap)
        budget = SearchBudget(self.settings.search_budget)
        if g.has_loops:
            return graph_report(g, ["chromatic_number"], budget)
        return graph_report(g, budget=budget)

    def survey_rows(self, kind: str, start: int, stop: int, props: List[str]) -> List[Dict[str, Any]]:
        """One row per n with the requested oracle properties"""
        if start > stop:
            raise InvalidInput(f"empty range {start}..{stop}")
        try:
            build = self.survey_builders[kind]
        except KeyError:
            raise InvalidInput(f"unknown survey kind {kind!r}") from None
        rows = []
        for n in range(start, stop + 1):
            g = build(n)
            check_oracle_cap(g, self.settings.oracle_cap)
            values = graph_report(g, props, SearchBudget(self.settings.search_budget)).model_dump(mode="json")
            rows.append({"n": n, "vertices": g.order, **{p: values.get(p) for p in props}})
            logger.debug("surveyed %s %d", kind, n)
        return rows

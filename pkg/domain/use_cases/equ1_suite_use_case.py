from domain.models.report import ScenarioReport
from domain.models.verdicts import Verdict
from domain.use_cases.scenario_use_case import ScenarioUseCase
from infrastructure.algebra import dualnum, modcat
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

EULER_RANKS = (2, 3)


class Equ1SuiteUseCase(ScenarioUseCase):
    """
    Stable Hom between eta images against Hom + Ext^1 over kQ for Q: 1 -> 2, the cohomology
    functor on eta images, and the Euler form on small type-A quivers.
    """
    scenario_id = "equ1-suite"

    def _run(self, report: ScenarioReport) -> None:
        cap = self.cap
        document = self._load("example_dualnumbers_a2.txt")
        base = document.algebra
        pair = dualnum.dual_pair(base)
        corpus = dualnum.indecomposable_corpus(base)

        for X in corpus:
            for Y in corpus:
                check = dualnum.verify_equ1(pair, X, Y)
                report.record(
                    f"dim stable Hom(eta {check.source}, eta {check.target})",
                    check.hom_dimension + check.ext_dimension,
                    check.stable_dimension,
                    "stated",
                )

        for X in corpus:
            H = dualnum.cohomology_H(pair, dualnum.eta(pair, X))
            self._verdict(report, f"H(eta {X.display_name()}) is isomorphic to {X.display_name()}",
                          Verdict.YES, modcat.is_isomorphic(H, X).verdict, "derived")
            self._verdict(report, f"eta {X.display_name()} is an indecomposable non-projective GP module",
                          Verdict.YES, dualnum.eta_gp_report(pair, X, cap).verdict, "derived")

        for n in EULER_RANKS:
            algebra, modules = dualnum.indecomposables_type_a(n, base.field)
            failures = [
                f"({X.display_name()}, {Y.display_name()})"
                for X in modules
                for Y in modules
                if dualnum.euler_form(X, Y) != dualnum.euler_bilinear(algebra, X.dim_vector, Y.dim_vector)
            ]
            report.record(f"Euler form on {algebra.name}: pairs where Hom - Ext^1 differs", [], failures, "derived")

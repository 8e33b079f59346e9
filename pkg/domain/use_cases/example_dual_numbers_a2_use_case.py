from domain.models.report import ScenarioReport
from domain.models.singularity import SgObject
from domain.models.verdicts import PresentationStatus, Verdict
from domain.use_cases.scenario_use_case import ScenarioUseCase
from infrastructure.algebra import dualnum, endo, modcat, sgcat
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


class ExampleDualNumbersA2UseCase(ScenarioUseCase):
    """
    A = kQ[eps] for Q: 1 -> 2 with M = A + eta(S_1).
    """
    scenario_id = "example-dualnumbers-a2"

    def _run(self, report: ScenarioReport) -> None:
        document = self._load("example_dualnumbers_a2.txt")
        base = document.algebra
        cap = self.cap
        pair = dualnum.dual_pair(base)
        A = pair.algebra
        report.record("dim kQ[eps]", 6, A.dimension, "derived")

        S1 = self.algebra_source.resolve(document, "S_1")
        self._verdict(report, "S_1 is exceptional", Verdict.YES, dualnum.is_exceptional(S1), "stated")
        E = dualnum.eta(pair, S1)
        report.record("dimension vector of eta(S_1) = kQ", (1, 2), E.dim_vector, "stated")
        gp_report = dualnum.eta_gp_report(pair, S1, cap)
        self._verdict(
            report, "eta(S_1) is Gorenstein projective, indecomposable and not projective",
            Verdict.YES, gp_report.verdict, "derived",
        )
        H = dualnum.cohomology_H(pair, E)
        self._verdict(report, "H(eta(S_1)) is isomorphic to S_1", Verdict.YES,
                      modcat.is_isomorphic(H, S1).verdict, "derived")

        summands = [modcat.projective(A, v) for v in A.vertices] + [E]
        endo_data = endo.endo_algebra(summands, list(A.vertices) + ["E"])
        report.record("dim Gamma", 14, endo_data.dimension, "derived")
        claim = self._load("example_dualnumbers_a2_gamma.txt").claim()
        verdict = endo.verify_presentation(endo_data, claim)
        report.record(
            "Gamma is given by the relations {beta alpha, alpha delta - gamma beta}",
            PresentationStatus.VERIFIED.value,
            verdict.status.value,
            "stated",
            inconclusive=verdict.status == PresentationStatus.INCONCLUSIVE,
        )

        presentation = endo.present_endo_algebra(endo_data, name="Gamma")
        _, pd = endo.right_module_structure(presentation, cap)
        report.record("pd M_Gamma", 0, pd.value, "stated", inconclusive=not pd.is_conclusive)
        partial = endo.is_partial_resolution(presentation, cap)
        report.record("simple Gamma-modules killed by M (x) -", ["E"], partial.simples, "derived")
        self._verdict(report, "Gamma is a partial resolution of A", Verdict.YES, partial.verdict, "stated")

        corpus = dualnum.indecomposable_corpus(base)
        candidates = [dualnum.eta(pair, X) for X in corpus]
        classification = sgcat.classify(candidates, cap)
        report.record(
            "classes of the eta images",
            len(corpus),
            len(classification.classes),
            "derived",
            inconclusive=bool(classification.inconclusive),
        )
        perpendicular = sgcat.perp([E], classification, cap)
        report.record(
            "q(M)^perp",
            ["eta(P_1)"],
            [members[0].display_name() for members in perpendicular.classes],
            "derived",
            inconclusive=bool(perpendicular.inconclusive),
        )
        pattern = sgcat.semisimple_pattern_check(perpendicular.classes, 1, [0], cap)
        self._verdict(
            report, "q(M)^perp is k-mod with the identity translation", Verdict.YES, pattern.verdict, "stated"
        )
        fixed = sgcat.sg_is_isomorphic(SgObject(module=E), SgObject(module=E, shift=1), cap).verdict
        self._verdict(report, "the translation fixes q(eta(S_1))", Verdict.YES, fixed, "stated")

        schofield = dualnum.schofield_perp(S1, corpus)
        report.record(
            "perpendicular category of S_1 in kQ-mod",
            ["P_1"],
            [X.display_name() for X in schofield.members],
            "stated",
        )
        report.record(
            "simple objects of the perpendicular category",
            schofield.expected_simple_count,
            len(schofield.simple_objects),
            "stated",
        )
        if pattern.failures:
            logger.warning(f"Pattern check failures: {pattern.failures}")

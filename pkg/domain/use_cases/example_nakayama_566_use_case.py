from domain.models.report import ScenarioReport
from domain.models.singularity import SgObject
from domain.models.verdicts import PresentationStatus, Verdict
from domain.use_cases.scenario_use_case import ScenarioUseCase
from infrastructure.algebra import endo, gproj, homol, modcat, qalg, sgcat
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

GAMMA_VERTICES = ["1", "2", "3", "2p"]


class ExampleNakayama566UseCase(ScenarioUseCase):
    """
    The Nakayama algebra with admissible sequence (5, 6, 6) and M = A + S_2^[3]:
    construction, Gorenstein projectives, the presentation of End_A(M)^op, the
    partial-resolution certificates and the perpendicular category q(M)^perp.
    """
    scenario_id = "example-nakayama-566"

    def _run(self, report: ScenarioReport) -> None:
        document = self._load("example_nakayama_566.txt")
        A = document.algebra
        cap = self.cap

        report.record("dim A", 17, A.dimension, "stated")
        certificate = qalg.certify_nilpotency_independence(A)
        report.record("raising the nilpotency bound leaves A unchanged", True, certificate.stable, "derived")
        lengths = tuple(modcat.projective(A, v).dimension for v in A.vertices)
        report.record("lengths of P_1, P_2, P_3", (5, 6, 6), lengths, "stated")

        S = self.algebra_source.resolve(document, "N_2_3")
        omega = modcat.is_isomorphic(homol.syzygy(S), S).verdict
        self._verdict(report, "Omega(S_2^[3]) is isomorphic to S_2^[3]", Verdict.YES, omega, "derived")
        self._verdict(report, "A is Gorenstein", Verdict.NO, homol.is_gorenstein(A, cap).verdict, "derived")

        indecomposables = modcat.enumerate_indecomposables(A)
        report.record("indecomposable A-modules", 17, len(indecomposables), "derived")
        gp = gproj.classify_gp(indecomposables, cap)
        report.record(
            "non-projective Gorenstein projective indecomposables",
            ["S_2^[3]"],
            [X.display_name() for X in gp.gorenstein_projective],
            "stated",
            inconclusive=bool(gp.inconclusive),
        )
        report.record("inconclusive Gorenstein-projective verdicts", 0, len(gp.inconclusive), "stated")

        summands = self.algebra_source.generator(document)
        generator, missing = endo.is_generator(summands)
        self._verdict(report, "M = A + S_2^[3] is a generator", Verdict.YES, generator, "stated")
        cm = gproj.cm_finite_report(A, summands, cap)
        self._verdict(report, "add M is the category of Gorenstein projectives", Verdict.YES, cm.cm_finite, "stated")
        context = gp.projective + gp.gorenstein_projective
        thick = gproj.is_thick_addM(summands, context)
        self._verdict(report, "add M is thick in the Gorenstein projectives", Verdict.YES, thick.verdict, "derived")

        endo_data = endo.endo_algebra(summands, GAMMA_VERTICES)
        report.record("dim Gamma", 24, endo_data.dimension, "derived")
        claim = self._load("example_nakayama_566_gamma.txt").claim()
        verdict = endo.verify_presentation(endo_data, claim)
        report.record(
            "Gamma is given by the relations {ab, beta b a alpha, ba - alpha gamma beta}",
            PresentationStatus.VERIFIED.value,
            verdict.status.value,
            "stated",
            inconclusive=verdict.status == PresentationStatus.INCONCLUSIVE,
        )
        wrong = endo.verify_presentation(endo_data, self._load("example_nakayama_566_gamma_wrong.txt").claim())
        report.record("the relations {ab, beta b a alpha, ba} are not verified", True,
                      wrong.status != PresentationStatus.VERIFIED, "derived")

        presentation = endo.present_endo_algebra(endo_data, name="Gamma")
        _, pd = endo.right_module_structure(presentation, cap)
        report.record("pd M_Gamma", 0, pd.value, "stated", inconclusive=not pd.is_conclusive)
        partial = endo.is_partial_resolution(presentation, cap)
        report.record("simple Gamma-modules killed by M (x) -", ["2p"], partial.simples, "derived")
        self._verdict(report, "Gamma is a partial resolution of A", Verdict.YES, partial.verdict, "stated")

        candidates = [X for X in indecomposables if not homol.is_projective(X)]
        report.record("non-projective indecomposables", 14, len(candidates), "derived")
        classification = sgcat.classify(candidates, cap)
        report.record(
            "nonzero isomorphism classes in the singularity category",
            6,
            len(classification.classes),
            "stated",
            inconclusive=bool(classification.inconclusive),
        )
        report.record("inconclusive stabilizations", 0, len(classification.inconclusive), "stated")
        self_injective = self._load("example_nakayama_44.txt").algebra
        stable = [X for X in modcat.enumerate_indecomposables(self_injective) if not homol.is_projective(X)]
        report.record(
            "classes match the non-projective indecomposables of Nakayama (4, 4)",
            len(stable),
            len(classification.classes),
            "stated",
        )
        self._verdict(report, "q(S_2^[3]) is nonzero", Verdict.NO, sgcat.sg_is_zero(S, cap), "derived")
        shifted = sgcat.sg_is_isomorphic(SgObject(module=S), SgObject(module=S, shift=1), cap).verdict
        self._verdict(report, "the translation fixes q(S_2^[3])", Verdict.YES, shifted, "derived")

        perpendicular = sgcat.perp(summands, classification, cap)
        report.record(
            "classes in q(M)^perp",
            2,
            len(perpendicular.classes),
            "stated",
            inconclusive=bool(perpendicular.inconclusive),
        )
        pattern = sgcat.semisimple_pattern_check(perpendicular.classes, 2, [1, 0], cap)
        self._verdict(
            report,
            "q(M)^perp is semisimple with two simples swapped by the translation",
            Verdict.YES,
            pattern.verdict,
            "stated",
        )
        if pattern.failures:
            logger.warning(f"Pattern check failures: {pattern.failures}")

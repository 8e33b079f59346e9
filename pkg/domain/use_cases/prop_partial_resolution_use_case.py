from domain.models.report import ScenarioReport
from domain.models.verdicts import Verdict
from domain.use_cases.scenario_use_case import ScenarioUseCase
from infrastructure.algebra import dualnum, endo, gproj, modcat
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


class PropPartialResolutionUseCase(ScenarioUseCase):
    """
    Partial-resolution certificates (M_Gamma projective, simples of the kernel category of finite
    projective dimension) for both worked examples, the resolution case of the dual numbers,
    finite and infinite M-resolutions, and thickness of add M.
    """
    scenario_id = "prop-partial-resolution"

    def _run(self, report: ScenarioReport) -> None:
        cap = self.cap

        document = self._load("example_nakayama_566.txt")
        A = document.algebra
        summands = self.algebra_source.generator(document)
        generator, _ = endo.is_generator(summands)
        self._verdict(report, "(5,6,6): M is a generator", Verdict.YES, generator, "stated")
        presentation = endo.present_endo_algebra(endo.endo_algebra(summands, ["1", "2", "3", "2p"]))
        _, pd = endo.right_module_structure(presentation, cap)
        report.record("(5,6,6): pd M_Gamma", 0, pd.value, "stated", inconclusive=not pd.is_conclusive)
        partial = endo.is_partial_resolution(presentation, cap)
        self._verdict(report, "(5,6,6): kernel-category simples have finite pd", Verdict.YES, partial.verdict, "stated")
        cm = gproj.cm_finite_report(A, summands, cap, gamma=presentation.algebra)
        self._verdict(
            report, "(5,6,6): gl.dim Gamma is finite exactly when A is Gorenstein",
            Verdict.YES, cm.consistent, "derived",
        )

        base = self._load("example_dualnumbers_a2.txt")
        pair = dualnum.dual_pair(base.algebra)
        E = dualnum.eta(pair, self.algebra_source.resolve(base, "S_1"))
        dual_summands = [modcat.projective(pair.algebra, v) for v in pair.algebra.vertices] + [E]
        dual_presentation = endo.present_endo_algebra(
            endo.endo_algebra(dual_summands, list(pair.algebra.vertices) + ["E"])
        )
        _, pd = endo.right_module_structure(dual_presentation, cap)
        report.record("kQ[eps]: pd M_Gamma", 0, pd.value, "stated", inconclusive=not pd.is_conclusive)
        partial = endo.is_partial_resolution(dual_presentation, cap)
        self._verdict(report, "kQ[eps]: kernel-category simples have finite pd", Verdict.YES, partial.verdict, "stated")

        point = self._load("dual_numbers_point.txt")
        dual = dualnum.dual_pair(point.algebra).algebra
        regular = modcat.projective(dual, "1")
        simple = modcat.simple(dual, "1")
        auslander = endo.present_endo_algebra(endo.endo_algebra([regular, simple], ["P", "S"]))
        resolution = endo.is_resolution(auslander, cap)
        report.record(
            "k[eps] + k: gl.dim Gamma", 2, resolution.value, "derived", inconclusive=not resolution.conclusive
        )
        cm = gproj.cm_finite_report(dual, [regular, simple], cap, gamma=auslander.algebra)
        self._verdict(report, "k[eps] is CM-finite with M = k[eps] + k", Verdict.YES, cm.cm_finite, "derived")
        self._verdict(report, "k[eps]: gl.dim Gamma is finite exactly when A is Gorenstein",
                      Verdict.YES, cm.consistent, "derived")
        finite = endo.m_resolution(auslander, simple, cap)
        report.record("k has a finite (k[eps] + k)-resolution", True, finite.finite, "derived")
        projective_only = endo.present_endo_algebra(endo.endo_algebra([regular], ["P"]))
        infinite = endo.m_resolution(projective_only, simple, cap)
        report.record("k has no finite k[eps]-resolution", False, infinite.finite, "derived")

        self_injective = self._load("example_nakayama_44.txt")
        context = modcat.enumerate_indecomposables(self_injective.algebra)
        thick = gproj.is_thick_addM(self.algebra_source.generator(self_injective), context)
        self._verdict(report, "(4,4): add(A + S_1) is not thick", Verdict.NO, thick.verdict, "derived")
        if thick.violations:
            logger.info(f"Thickness violations: {thick.violations[:3]}")

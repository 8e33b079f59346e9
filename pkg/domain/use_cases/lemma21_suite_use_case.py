from typing import List, Tuple

import numpy as np

from core.config import get_settings
from domain.models.module import FdModule
from domain.models.report import ScenarioReport
from domain.models.verdicts import EndoPresentation, Verdict
from domain.use_cases.scenario_use_case import ScenarioUseCase
from infrastructure.algebra import dualnum, endo, homol, modcat
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

ADJUNCTION_SAMPLES = 20


class Lemma21SuiteUseCase(ScenarioUseCase):
    """
    Hom_A(M, -) for a generator M: M_Gamma is projective, Hom_A(M, -) is fully faithful,
    the counit M (x)_Gamma Hom_A(M, X) -> X is an isomorphism, and the adjunction holds
    dimensionwise on sampled pairs.
    """
    scenario_id = "lemma21-suite"

    def _run(self, report: ScenarioReport) -> None:
        document = self._load("example_nakayama_566.txt")
        summands = self.algebra_source.generator(document)
        presentation = endo.present_endo_algebra(endo.endo_algebra(summands, ["1", "2", "3", "2p"]))
        corpus = modcat.enumerate_indecomposables(document.algebra)
        self._check(report, "(5,6,6)", presentation, corpus)

        base = self._load("example_dualnumbers_a2.txt")
        pair = dualnum.dual_pair(base.algebra)
        A = pair.algebra
        etas = [dualnum.eta(pair, X) for X in dualnum.indecomposable_corpus(base.algebra)]
        E = dualnum.eta(pair, self.algebra_source.resolve(base, "S_1"))
        dual_summands = [modcat.projective(A, v) for v in A.vertices] + [E]
        dual_presentation = endo.present_endo_algebra(endo.endo_algebra(dual_summands, list(A.vertices) + ["E"]))
        dual_corpus = [modcat.projective(A, v) for v in A.vertices] + [modcat.simple(A, v) for v in A.vertices] + etas
        self._check(report, "kQ[eps]", dual_presentation, dual_corpus)

    def _check(self, report: ScenarioReport, tag: str, presentation: EndoPresentation, corpus: List[FdModule]) -> None:
        cap = self.cap
        _, pd = endo.right_module_structure(presentation, cap)
        report.record(f"{tag}: pd M_Gamma", 0, pd.value, "stated", inconclusive=not pd.is_conclusive)

        mismatches = []
        for X in corpus:
            for Y in corpus:
                functor_side = modcat.hom_space(endo.hom_functor(presentation, X), endo.hom_functor(presentation, Y))
                if functor_side.dimension != modcat.hom_space(X, Y).dimension:
                    mismatches.append(f"({X.display_name()}, {Y.display_name()})")
        report.record(f"{tag}: pairs where Hom_Gamma(HomM X, HomM Y) and Hom_A(X, Y) differ", [], mismatches, "stated")

        not_iso = []
        unsure = False
        for X in corpus:
            verdict = modcat.is_isomorphic(endo.tensor_functor(presentation, endo.hom_functor(presentation, X)), X).verdict
            if verdict == Verdict.NO:
                not_iso.append(X.display_name())
            unsure = unsure or verdict == Verdict.UNKNOWN
        report.record(f"{tag}: modules X with M (x) Hom_A(M, X) not isomorphic to X", [], not_iso, "derived",
                      inconclusive=unsure)

        failures = []
        for Y, X in self._adjunction_pairs(presentation, corpus):
            left = modcat.hom_space(Y, endo.hom_functor(presentation, X)).dimension
            right = modcat.hom_space(endo.tensor_functor(presentation, Y), X).dimension
            if left != right:
                failures.append(f"({Y.display_name()}, {X.display_name()}): {left} != {right}")
        report.record(f"{tag}: sampled pairs violating the adjunction", [], failures, "derived")

    @staticmethod
    def _adjunction_pairs(presentation: EndoPresentation, corpus: List[FdModule]) -> List[Tuple[FdModule, FdModule]]:
        gamma = presentation.algebra
        left_side = (
            [modcat.simple(gamma, v) for v in gamma.vertices]
            + [modcat.projective(gamma, v) for v in gamma.vertices]
            + [homol.syzygy(modcat.simple(gamma, v)) for v in gamma.vertices]
        )
        left_side = [Y for Y in left_side if not Y.is_zero]
        rng = np.random.default_rng(get_settings().RANDOM_SEED)
        picks = rng.integers(0, [len(left_side), len(corpus)], size=(ADJUNCTION_SAMPLES, 2))
        return [(left_side[int(i)], corpus[int(j)]) for i, j in picks]

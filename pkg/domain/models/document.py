from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field

from domain.models.algebra import AlgebraData
from domain.models.module import FdModule
from domain.models.verdicts import PresentationClaim


class AlgebraDocument(BaseModel):
    """
    Contents of one algebra file: the algebra, its named modules and the module
    references listed under `generator`.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: str = Field(..., description="File path or '<string>'.")
    algebra: AlgebraData
    modules: Dict[str, FdModule] = Field(default_factory=dict)
    generator: Tuple[str, ...] = Field((), description="Module references of the summands of M.")

    def claim(self) -> PresentationClaim:
        """The file read as a claimed presentation (quiver, relations, nilpotency bound)."""
        return PresentationClaim(
            name=self.algebra.name,
            quiver=self.algebra.quiver,
            relations=self.algebra.relations,
            nilpotency=self.algebra.nilpotency,
        )

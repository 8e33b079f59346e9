from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional, Union

from domain.models.algebra import FieldSpec
from domain.models.document import AlgebraDocument
from domain.models.module import FdModule


class AlgebraSource(ABC):
    """
    Interface for reading algebras and modules from stored descriptions.
    """

    @abstractmethod
    def load(self, path: Union[str, Path], field: Optional[FieldSpec] = None) -> AlgebraDocument:
        """
        Reads an algebra file.

        Args:
            path: Location of the file.
            field: Overrides the field declared in the file when given.

        Returns:
            The parsed AlgebraDocument.
        """
        pass

    @abstractmethod
    def resolve(self, document: AlgebraDocument, reference: str) -> FdModule:
        """
        Turns a module reference into a module over the document's algebra.

        Args:
            document: A document returned by `load`.
            reference: A named module of the document or one of P_v, S_v, I_v, A, N_v_l.

        Returns:
            The referenced FdModule.
        """
        pass

    def generator(self, document: AlgebraDocument) -> List[FdModule]:
        """The summands listed under `generator`, resolved in order."""
        return [self.resolve(document, reference) for reference in document.generator]

"""YES/NO certificates for closed-graph membership."""

from __future__ import annotations

from dataclasses import dataclass

from .forbidden import ForbiddenWitness, classify, validate_witness
from .graph import Graph
from .intervals import IntervalRepresentation, build_representation, validate_representation
from .orderings import Ordering, is_closed_ordering, is_proper_interval_ordering, recognize
from .straight import StraightEnumeration, first_straight_failure, orient_from_ordering


class CertificateError(AssertionError):
    """A produced certificate failed its own re-validation."""


@dataclass(frozen=True)
class YesCertificate:
    ordering: Ordering
    representation: IntervalRepresentation
    straight: StraightEnumeration

    verdict = True

    def validate(self, G: Graph) -> None:
        if is_proper_interval_ordering(G, self.ordering) is not None:
            raise CertificateError("ordering is not a proper interval ordering")
        if is_closed_ordering(G, self.ordering) is not None:
            raise CertificateError("ordering is not closed")
        if validate_representation(G, self.representation):
            raise CertificateError("interval representation does not validate")
        if first_straight_failure(self.straight.orientation, self.straight.order.order) is not None:
            raise CertificateError("enumeration is not straight")

    def to_json(self) -> dict:
        return {
            "verdict": "YES",
            "ordering": str(self.ordering),
            "intervals": self.representation.to_json(),
            "straight_enumeration": self.straight.to_json(),
        }


@dataclass(frozen=True)
class NoCertificate:
    witness: ForbiddenWitness

    verdict = False

    def validate(self, G: Graph) -> None:
        if not validate_witness(G, self.witness):
            raise CertificateError(f"witness {self.witness} does not re-validate")

    def to_json(self) -> dict:
        return {"verdict": "NO", "witness": self.witness.to_json()}


def certify(G: Graph) -> YesCertificate | NoCertificate:
    """Decide closedness and return a re-validated certificate either way.

    A NO answer always carries a chordless cycle, claw, net or tent, checked
    in that order.
    """
    sigma = recognize(G)
    if sigma is not None:
        cert = YesCertificate(
            sigma,
            build_representation(G, sigma),
            StraightEnumeration(sigma, orient_from_ordering(G, sigma)),
        )
    else:
        witness = classify(G).first_witness()
        if witness is None:
            raise CertificateError("recognition failed but no forbidden structure was found")
        cert = NoCertificate(witness)
    cert.validate(G)
    return cert

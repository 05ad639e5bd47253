"""Three-valued certified answers.

Predicates that are only semidecidable within a resolution window answer
CertifiedTrue or CertifiedFalse with a machine-checkable witness, or
Undetermined with the precision that was actually reached.  Merging is
pessimistic: a certified failure beats everything, an undetermined answer
beats a certified success.
"""

TRUE = "CertifiedTrue"
FALSE = "CertifiedFalse"
UNDETERMINED = "Undetermined"


class Verdict:

    __slots__ = ("status", "witness", "precision")

    def __init__(self, status, witness=None, precision=None):
        if status not in (TRUE, FALSE, UNDETERMINED):
            raise ValueError("bad verdict status %r" % status)
        self.status = status
        self.witness = witness
        self.precision = precision

    @classmethod
    def certified_true(cls, witness=None):
        return cls(TRUE, witness=witness)

    @classmethod
    def certified_false(cls, witness=None):
        return cls(FALSE, witness=witness)

    @classmethod
    def undetermined(cls, precision, witness=None):
        return cls(UNDETERMINED, witness=witness, precision=precision)

    @property
    def is_true(self):
        return self.status == TRUE

    @property
    def is_false(self):
        return self.status == FALSE

    @property
    def is_undetermined(self):
        return self.status == UNDETERMINED

    def to_json(self):
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.precision is not None:
            out["precision"] = self.precision
        return out

    def __repr__(self):
        if self.is_undetermined:
            return "Verdict(%s, precision=%r)" % (self.status, self.precision)
        return "Verdict(%s, %r)" % (self.status, self.witness)


def merge_conjunction(verdicts, witness_on_true=None):
    """All parts must hold.  CertifiedFalse dominates, then Undetermined
    (reporting the smallest precision reached), then CertifiedTrue."""
    verdicts = list(verdicts)
    for v in verdicts:
        if v.is_false:
            return v
    undet = [v for v in verdicts if v.is_undetermined]
    if undet:
        precisions = [v.precision for v in undet if v.precision is not None]
        p = min(precisions) if precisions else None
        return Verdict.undetermined(p, witness=undet[0].witness)
    if witness_on_true is None:
        witness_on_true = {"kind": "conjunction",
                           "parts": [v.witness for v in verdicts
                                     if v.witness is not None]}
    return Verdict.certified_true(witness_on_true)


def mat_to_strs(F, M):
    """Matrix rendered entrywise through the field, for witness payloads."""
    return [[F.to_str(a) for a in row] for row in M]

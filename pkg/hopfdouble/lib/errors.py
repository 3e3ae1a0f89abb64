class HopfError(Exception):
    """ Base class for errors raised by the hopfdouble library """
    pass


class DivisionByZero(HopfError, ZeroDivisionError):
    pass


class MalformedTensor(HopfError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DimensionMismatch(HopfError):
    def __init__(self, message, expected=None, actual=None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class NotCertified(HopfError):
    def __init__(self, name, level):
        super().__init__('%s is not certified at level %s' % (name, level))
        self.name = name
        self.level = level


class SingularMatrix(HopfError):
    pass


class SingularAntipode(SingularMatrix):
    pass


class SingularBraiding(SingularMatrix):
    pass


class NotGrouplike(HopfError):
    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


class NotAMorphism(HopfError):
    def __init__(self, identity, residual=None):
        super().__init__('Morphism identity fails: ' + identity)
        self.identity = identity
        self.residual = residual


class NotClosed(HopfError):
    pass


class PresentationMismatch(HopfError):
    def __init__(self, relation, residual=None):
        super().__init__('Relation does not hold: ' + relation)
        self.relation = relation
        self.residual = residual


class RelationViolated(HopfError):
    def __init__(self, relation, residual=None):
        super().__init__('Relation violated: ' + relation)
        self.relation = relation
        self.residual = residual


class UnsupportedDimension(HopfError):
    pass


class CompatibilityFailed(HopfError):
    def __init__(self, law, h=None, v=None):
        super().__init__('Compatibility fails (%s) at h=%s, v=%s' % (law, h, v))
        self.law = law
        self.h = h
        self.v = v


class NonConfluent(HopfError):
    def __init__(self, overlap, residual=None):
        super().__init__('Overlap does not resolve: %s' % (overlap,))
        self.overlap = overlap
        self.residual = residual


class InconsistentExtension(HopfError):
    def __init__(self, relation, generator=None):
        super().__init__('Extension does not respect relation %s (generator %s)' % (relation, generator))
        self.relation = relation
        self.generator = generator


class AxiomFailed(HopfError):
    def __init__(self, report):
        failed = [e.axiom for e in report.entries if not e.passed]
        super().__init__('Axioms failed: ' + ', '.join(failed))
        self.report = report


class UnknownName(HopfError):
    pass


class NotIndecomposable(HopfError):
    def __init__(self, name):
        super().__init__('%s decomposes' % name)
        self.name = name

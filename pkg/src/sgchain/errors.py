"""Exception types raised across the package.

Every error carries the data needed to reproduce the failure (a witness
triple, an offending index, a line number) as attributes, not just text.
"""


class SemigroupError(ValueError):
    """Base class for all errors raised by sgchain."""


class ShapeMismatch(SemigroupError):
    pass


class SizeLimit(SemigroupError):
    pass


class NonAssociative(SemigroupError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")


class BadZero(SemigroupError):
    def __init__(self, i):
        self.element = i
        super().__init__(f"element {i} is not absorbing")


class BadIdentity(SemigroupError):
    def __init__(self, i):
        self.element = i
        super().__init__(f"element {i} is not a two-sided identity")


class EmptyGenerators(SemigroupError):
    pass


class EmptySubset(SemigroupError):
    pass


class NotAnIdeal(SemigroupError):
    def __init__(self, pair, message="set is not a two-sided ideal"):
        self.pair = pair
        super().__init__(f"{message}: witness {pair}")


class NotARightIdeal(NotAnIdeal):
    def __init__(self, pair):
        super().__init__(pair, "set is not a right ideal")


class NotASubsemigroup(SemigroupError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"set is not closed under multiplication: witness {pair}")


class MissingZero(SemigroupError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"part {index} has no zero")


class NoZero(SemigroupError):
    pass


class BadSandwichMatrix(SemigroupError):
    pass


class ActMismatch(SemigroupError):
    pass


class NotAnAction(SemigroupError):
    def __init__(self, a, s, t):
        self.triple = (a, s, t)
        super().__init__(f"point {a}: a(st) != (as)t for s={s}, t={t}")


class NotASubact(SemigroupError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"set is not closed under the action: witness {pair}")


class TooLarge(SemigroupError):
    pass


class PreconditionFailed(SemigroupError):
    def __init__(self, check, message=""):
        self.check = check
        super().__init__(f"{check}: {message}" if message else check)


class NotZeroMinimal(SemigroupError):
    pass


class UnknownLetter(SemigroupError):
    def __init__(self, letter):
        self.letter = letter
        super().__init__(f"letter {letter!r} is not in the alphabet")


class UnorientableRule(SemigroupError):
    def __init__(self, lhs, rhs):
        self.rule = (lhs, rhs)
        super().__init__(f"cannot orient {lhs!r} = {rhs!r}")


class NotConfluent(SemigroupError):
    pass


class NotInKernel(SemigroupError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"{word!r} is not a kernel element")


class ParseError(SemigroupError):
    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class SemanticError(SemigroupError):
    pass

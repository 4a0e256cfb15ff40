# groups/exceptions.py


class GroupError(Exception):
    """Base class for every failure while building or reading a group"""


class MalformedTable(GroupError):
    def __init__(self, message):
        super().__init__(f"malformed Cayley table: {message}")


class NoIdentity(GroupError):
    def __init__(self):
        super().__init__("table has no two-sided identity element")


class NoInverse(GroupError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(GroupError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(
            f"multiplication is not associative at (a, b, c) = ({a}, {b}, {c})")


class OrderCapExceeded(GroupError):
    def __init__(self, order, cap):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds the order cap {cap}")


class InvalidParameter(GroupError):
    pass


class InvalidPermutation(GroupError):
    def __init__(self, index, message):
        self.index = index
        super().__init__(f"generator {index}: {message}")


class NotAnAutomorphism(GroupError):
    def __init__(self, h, message):
        self.h = h
        super().__init__(f"action image of {h} is not an automorphism: {message}")


class NotAHomomorphism(GroupError):
    def __init__(self, h1, h2):
        self.pair = (h1, h2)
        super().__init__(
            f"action is not a homomorphism: phi({h1}*{h2}) != phi({h1}) o phi({h2})")


class TableFormatError(GroupError):
    def __init__(self, path, line, message):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")

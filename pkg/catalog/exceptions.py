# catalog/exceptions.py


class SpecError(Exception):
    """A group expression that cannot be parsed or evaluated"""

    def __init__(self, position, message):
        self.position = position
        super().__init__(f'at position {position}: {message}')


class SpecSyntaxError(SpecError):
    def __init__(self, position, expected):
        self.expected = expected
        super().__init__(position, expected)


class SpecEvaluationError(SpecError):
    pass

# lattice/exceptions.py


class ParentMismatch(Exception):
    def __init__(self, left, right):
        super().__init__(
            f'subgroups belong to different groups ({left.label or "?"} vs {right.label or "?"})')

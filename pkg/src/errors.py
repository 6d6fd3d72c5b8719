"""Toolkit Exceptions"""


class CompSetError(Exception):
    """Base class for toolkit failures"""
    kind = 'error'
    exit_code = 2

    def to_record(self):
        """Machine-readable form printed by the CLI"""
        return {'error': self.kind, 'code': self.exit_code, 'message': str(self)}


class InputError(CompSetError, ValueError):
    """Malformed or incompatible input"""
    kind = 'input'
    exit_code = 2


class ParseError(InputError):
    """Sequence-set file could not be parsed"""
    kind = 'parse'

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = ''
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)

    def to_record(self):
        record = super().to_record()
        record.update({'line': self.line, 'column': self.column})
        return record


class AdmissibilityError(InputError):
    """Coefficient tuple violates a construction identity"""
    kind = 'admissibility'

    def __init__(self, identity, coeffs=None):
        self.identity = identity
        self.coeffs = coeffs
        message = f"inadmissible coefficients: {identity}"
        if coeffs is not None:
            message += f" (exponents {tuple(coeffs)})"
        super().__init__(message)


class VerificationError(CompSetError):
    """A stack failed the complementary-set test"""
    kind = 'verification'
    exit_code = 1

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class WorkBoundExceeded(CompSetError, RuntimeError):
    """Exhaustive search hit the configured node budget"""
    kind = 'work_bound'
    exit_code = 3

    def __init__(self, nodes, bound):
        self.nodes = nodes
        self.bound = bound
        super().__init__(f"search visited {nodes} nodes, work bound is {bound}")


class SeedDataError(CompSetError):
    """A seed data file is missing or does not verify"""
    kind = 'seed_data'
    exit_code = 2

    def __init__(self, message, seed=None):
        self.seed = seed
        super().__init__(f"seed {seed}: {message}" if seed else message)

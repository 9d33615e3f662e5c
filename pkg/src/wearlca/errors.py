"""Exception hierarchy shared across the toolkit."""


class WearLcaError(Exception):
    """Base class for all toolkit errors."""


class UnreadableFile(WearLcaError):
    pass


class UnknownClassId(WearLcaError):
    def __init__(self, value, position):
        self.value = value
        self.position = position
        super().__init__(f"unknown class id {value} at position {position}")


class DimensionMismatch(WearLcaError):
    pass


class LengthMismatch(WearLcaError):
    pass


class UnknownClass(WearLcaError):
    pass


class DuplicateImageId(WearLcaError):
    def __init__(self, image_id):
        self.image_id = image_id
        super().__init__(f"duplicate image_id {image_id!r}")


class MissingFile(WearLcaError):
    pass


class ClassMapMismatch(WearLcaError):
    pass


class EmptyInput(WearLcaError):
    pass


class MixedFamilies(WearLcaError):
    pass


class PatchOutOfBounds(WearLcaError):
    pass


class NonPositiveCoverage(WearLcaError):
    pass


class InvalidFactor(WearLcaError):
    pass


class UnknownFlow(WearLcaError):
    def __init__(self, flow_id):
        self.flow_id = flow_id
        super().__init__(f"flow {flow_id!r} not present in the flow registry")


class UnknownScenario(WearLcaError):
    pass


class MissingBaseline(WearLcaError):
    pass


class IndicatorMismatch(WearLcaError):
    pass

"""Error taxonomy of the FAT driver."""


class FatError(Exception):
    pass


class BadSignatureError(FatError):
    """Sector 0 does not end in 0x55AA."""


class UnsupportedVariantError(FatError):
    """The volume is recognizably not FAT16/FAT32 (FAT12 range, NTFS, exFAT)."""

    def __init__(self, variant, message):
        super().__init__(message)
        self.variant = variant


class InconsistentBpbError(FatError):
    """BPB fields contradict each other or the medium."""


class VariantSizeMismatchError(FatError):
    """mkfs cannot fit the requested variant's cluster-count range."""


class NotFoundError(FatError):
    pass


class NotADirectoryError(FatError):
    pass


class ExistsError(FatError):
    """Target exists and overwrite was not requested."""


class DirNotEmptyError(FatError):
    pass


class DiskFullError(FatError):
    pass


class NameInvalidError(FatError):
    pass


class ReadOnlyVolumeError(FatError):
    pass


class CorruptVolumeError(FatError):
    """An on-disk structure contradicts itself (broken chain, bad entry)."""

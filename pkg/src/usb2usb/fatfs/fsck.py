"""Read-only FAT consistency checker.

Walks the directory tree, validates every cluster chain, and cross-checks
the FAT against what the tree references: cross-links, lost clusters,
chain/size disagreements, diverged FAT copies, and stale FSInfo all become
findings. A healthy volume yields an empty list.
"""

import struct
from dataclasses import dataclass

from .bpb import FAT32
from .errors import FatError
from .fat import FREE
from .volume import FatVolume, _Directory

_DOT = b".          "
_DOTDOT = b"..         "


@dataclass(frozen=True)
class Finding:
    severity: str
    code: str
    path: str
    detail: str

    @property
    def line(self):
        return f"{self.severity} {self.code} {self.path} {self.detail}"


def fsck(dev):
    """Check the volume on `dev`, returning a list of findings (empty when
    the volume is consistent)."""
    findings = []
    try:
        vol = FatVolume(dev)
    except FatError as exc:
        return [Finding("error", "mount-failed", "/", str(exc))]

    owners = {}
    _walk(vol, vol._root_entry(), owners, findings, set())
    _check_fat(vol, owners, findings)
    _check_fat_copies(vol, findings)
    _check_fsinfo(vol, findings)
    return findings


def _claim(vol, entry, owners, findings):
    """Validate and claim `entry`'s cluster chain, returning it ([] on any
    failure, which is already reported)."""
    if entry.first_cluster == 0:
        return []   # the FAT16 fixed root owns no clusters
    try:
        chain = vol.fat.chain(entry.first_cluster)
    except FatError as exc:
        findings.append(Finding("error", "broken-chain", entry.path or "/", str(exc)))
        return []
    for cluster in chain:
        if cluster in owners:
            findings.append(Finding(
                "error", "cross-link", entry.path or "/",
                f"cluster {cluster} also owned by {owners[cluster]}"))
            return []
        owners[cluster] = entry.path or "/"
    return chain


def _walk(vol, dir_entry, owners, findings, seen_dirs):
    if dir_entry.first_cluster:
        if dir_entry.first_cluster in seen_dirs:
            findings.append(Finding(
                "error", "dir-loop", dir_entry.path, "directory tree loops"))
            return
        seen_dirs.add(dir_entry.first_cluster)
    _claim(vol, dir_entry, owners, findings)

    try:
        directory = _Directory(vol, dir_entry)
        entries = directory.entries()
    except FatError as exc:
        findings.append(Finding("error", "unreadable-dir", dir_entry.path, str(exc)))
        return

    short_names = set()
    for entry in entries:
        if entry.raw_name in (_DOT, _DOTDOT):
            _check_dot(vol, dir_entry, entry, findings)
            continue
        if entry.is_volume_label:
            continue
        if entry.raw_name in short_names:
            findings.append(Finding(
                "error", "duplicate-name", entry.path,
                f"short name {entry.short_name} appears twice"))
        short_names.add(entry.raw_name)
        if entry.is_dir:
            if entry.first_cluster == 0:
                findings.append(Finding(
                    "error", "bad-entry", entry.path, "directory with no cluster"))
                continue
            _walk(vol, entry, owners, findings, seen_dirs)
        else:
            _check_file(vol, entry, owners, findings)


def _check_file(vol, entry, owners, findings):
    needed = -(-entry.size_bytes // vol.cluster_size)
    if entry.size_bytes == 0:
        if entry.first_cluster != 0:
            findings.append(Finding(
                "error", "size-mismatch", entry.path,
                "zero-size file with an allocated chain"))
        return
    if entry.first_cluster == 0:
        findings.append(Finding(
            "error", "size-mismatch", entry.path,
            f"{entry.size_bytes} bytes but no first cluster"))
        return
    chain = _claim(vol, entry, owners, findings)
    if chain and len(chain) != needed:
        findings.append(Finding(
            "error", "chain-length", entry.path,
            f"{len(chain)} clusters for {entry.size_bytes} bytes "
            f"(expected {needed})"))


def _check_dot(vol, parent, entry, findings):
    if entry.raw_name == _DOT and entry.first_cluster != parent.first_cluster:
        findings.append(Finding(
            "warn", "bad-dot", parent.path,
            f". points at {entry.first_cluster}, directory is at "
            f"{parent.first_cluster}"))


def _check_fat(vol, owners, findings):
    lost = []
    for cluster in range(vol.fat.min_cluster, vol.fat.max_cluster + 1):
        value = vol.fat.get(cluster)
        if value != FREE and cluster not in owners:
            lost.append(cluster)
    if lost:
        head = ", ".join(str(c) for c in lost[:8])
        more = f" (+{len(lost) - 8} more)" if len(lost) > 8 else ""
        findings.append(Finding(
            "error", "lost-clusters", "/",
            f"{len(lost)} allocated clusters unreachable: {head}{more}"))
    free = vol.fat.count_free()
    if free + len(owners) + len(lost) != vol.cluster_count:
        findings.append(Finding(
            "error", "conservation", "/",
            f"free {free} + used {len(owners) + len(lost)} != "
            f"{vol.cluster_count} clusters"))


def _check_fat_copies(vol, findings):
    bpb = vol.bpb
    if bpb.num_fats < 2:
        return
    first = vol.dev.read_blocks(bpb.reserved_sectors, bpb.sectors_per_fat)
    for copy in range(1, bpb.num_fats):
        start = bpb.reserved_sectors + copy * bpb.sectors_per_fat
        other = vol.dev.read_blocks(start, bpb.sectors_per_fat)
        if other != first:
            diff = next(i for i in range(len(first)) if first[i] != other[i])
            findings.append(Finding(
                "error", "fat-copy-mismatch", "/",
                f"copy {copy} differs from copy 0 at byte {diff}"))


def _check_fsinfo(vol, findings):
    if vol.variant != FAT32 or not vol.bpb.fsinfo_sector:
        return
    sec = vol.dev.read_blocks(vol.bpb.fsinfo_sector, 1)
    lead, = struct.unpack_from("<I", sec, 0)
    free, = struct.unpack_from("<I", sec, 488)
    if lead != 0x41615252:
        findings.append(Finding("warn", "fsinfo-bad", "/", "missing FSInfo signature"))
        return
    actual = vol.fat.count_free()
    if free != actual:
        findings.append(Finding(
            "warn", "fsinfo-stale", "/",
            f"FSInfo says {free} free clusters, FAT scan says {actual}"))

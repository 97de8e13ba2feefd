"""Command-line front end.

Exit codes: 0 success, 2 usage, 3 not found, 4 device or volume error,
5 transfer failure.
"""

import argparse
import sys

from .. import fatfs
from ..blockdev import BlockDeviceError, BlockImage
from ..bridge import (
    Bridge,
    BridgeError,
    DestFullError,
    JOB_DONE,
    NoSuchJobError,
    SamePortError,
    SourceInvalidError,
    TERMINAL_STATES,
)
from ..msc_host import MscError
from ..usb.bus import Port, UsbBusError
from . import state as state_mod
from .render import info_line, listing_lines
from .service import GatewayService

SECTORS_PER_MIB = 2048


def _parse_port(text):
    try:
        return Port(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"port must be A or B, not {text!r}")


def _parse_target(text):
    port_name, sep, path = text.partition(":")
    if not sep or not path.startswith("/"):
        raise argparse.ArgumentTypeError(
            f"expected PORT:/path, not {text!r}")
    return _parse_port(port_name), path


def _parse_listen(text):
    host, sep, port = text.rpartition(":")
    if not sep:
        raise argparse.ArgumentTypeError("expected host:port")
    try:
        return host, int(port)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad port number {port!r}")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="usb2usb",
        description="Two-port USB flash drive bridge (emulated).")
    parser.add_argument("--state", metavar="FILE",
                        help="session state file (default"
                             f" ./{state_mod.DEFAULT_STATE_FILE})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("attach", help="plug a disk image into a port")
    p.add_argument("port", type=_parse_port)
    p.add_argument("image")
    p.add_argument("--read-only", action="store_true")
    p.set_defaults(func=_cmd_attach)

    p = sub.add_parser("detach", help="unplug a port")
    p.add_argument("port", type=_parse_port)
    p.set_defaults(func=_cmd_detach)

    p = sub.add_parser("mkfs", help="format a disk image")
    p.add_argument("image")
    p.add_argument("--variant", required=True, choices=["fat16", "fat32"])
    p.add_argument("--spc", type=int, metavar="N",
                   help="sectors per cluster (default: auto)")
    p.add_argument("--label", default="NO NAME")
    p.add_argument("--size-mib", type=int, metavar="MIB",
                   help="create the image at this size if it is missing")
    p.set_defaults(func=_cmd_mkfs)

    p = sub.add_parser("ls", help="list a directory")
    p.add_argument("port", type=_parse_port)
    p.add_argument("path", nargs="?", default="/")
    p.set_defaults(func=_cmd_ls)

    p = sub.add_parser("info", help="volume label and space")
    p.add_argument("port", type=_parse_port)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("cp", help="copy between ports")
    p.add_argument("src", type=_parse_target, metavar="SRC-PORT:/path")
    p.add_argument("dst", type=_parse_target, metavar="DST-PORT:/path")
    p.add_argument("--overwrite", action="store_true")
    p.add_argument("--recursive", action="store_true")
    p.set_defaults(func=_cmd_cp)

    p = sub.add_parser("fsck", help="check an image for FAT damage")
    p.add_argument("image")
    p.set_defaults(func=_cmd_fsck)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--listen", type=_parse_listen, default=("127.0.0.1", 8787),
                   metavar="HOST:PORT")
    p.set_defaults(func=_cmd_serve)
    return parser


def _warn(message):
    print(f"usb2usb: {message}", file=sys.stderr)


def _restore(args):
    path = state_mod.state_path(args.state)
    ports = state_mod.load(path)
    bridge = Bridge()
    state_mod.restore(bridge, ports, _warn)
    return bridge, path, ports


def _cmd_attach(args):
    bridge, path, ports = _restore(args)
    snapshot = bridge.attach_image(args.port, args.image,
                                   read_only=args.read_only)
    ports[args.port] = {"image": args.image, "read_only": args.read_only}
    state_mod.save(path, ports)
    if snapshot.status == "ready":
        print(f"port {args.port.value}: ready")
        print(info_line(snapshot.volume))
        return 0
    print(f"port {args.port.value}: {snapshot.status} ({snapshot.error})")
    return 4


def _cmd_detach(args):
    bridge, path, ports = _restore(args)
    snapshot = bridge.detach(args.port)
    ports.pop(args.port, None)
    state_mod.save(path, ports)
    print(f"port {args.port.value}: {snapshot.status}")
    return 0


def _cmd_mkfs(args):
    variant = fatfs.FAT16 if args.variant == "fat16" else fatfs.FAT32
    try:
        image = BlockImage(args.image)
    except FileNotFoundError:
        if args.size_mib is None:
            raise FileNotFoundError(
                f"{args.image} not found (pass --size-mib to create it)")
        image = BlockImage.create(args.image,
                                  args.size_mib * SECTORS_PER_MIB)
    volume = fatfs.mkfs(image, variant, sectors_per_cluster=args.spc,
                        volume_label=args.label)
    image.flush()
    print(f"{args.image}: {volume.variant}, {volume.cluster_count} clusters")
    print(info_line(volume.volume_info()))
    return 0


def _cmd_ls(args):
    bridge, _, _ = _restore(args)
    listing = bridge.browse(args.port, args.path)
    for line in listing_lines(listing.entries):
        print(line)
    return 0


def _cmd_info(args):
    bridge, _, _ = _restore(args)
    print(info_line(bridge.volume_info(args.port)))
    return 0


def _cmd_cp(args):
    bridge, _, _ = _restore(args)
    subscription = bridge.subscribe()
    try:
        job = bridge.start_copy(args.src, args.dst,
                                overwrite=args.overwrite,
                                recursive=args.recursive)
        src_port, src_path = args.src
        dst_port, dst_path = args.dst
        print(f"{job.id}: {src_port.value}:{src_path} ->"
              f" {dst_port.value}:{dst_path} ({job.total_bytes} bytes)")
        final = _watch_job(bridge, subscription, job.id)
    finally:
        subscription.close()
        bridge.close()
    if final.state == JOB_DONE:
        print(f"{final.id}: done ({final.copied_bytes} bytes)")
        return 0
    _warn(f"{final.id}: {final.state}"
          + (f": {final.error}" if final.error else ""))
    return 5


def _watch_job(bridge, subscription, job_id):
    last_decile = -1
    while True:
        event = subscription.get(timeout=1.0)
        if event is None:
            status = bridge.job_status(job_id)
            if status.state in TERMINAL_STATES:
                return status
            continue
        job = event.payload
        if getattr(job, "id", None) != job_id:
            continue
        if event.kind == "job-finished":
            return job
        if job.total_bytes:
            decile = job.copied_bytes * 10 // job.total_bytes
            if decile > last_decile:
                last_decile = decile
                print(f"{job.id}: {job.copied_bytes * 100 // job.total_bytes:3d}%"
                      f" {job.copied_bytes}/{job.total_bytes}")


def _cmd_fsck(args):
    image = BlockImage(args.image, read_only=True)
    findings = fatfs.fsck(image)
    for finding in findings:
        print(finding.line)
    if not findings:
        print("clean")
    return 4 if any(f.severity == "error" for f in findings) else 0


def _cmd_serve(args):
    host, port = args.listen
    bridge, path, _ = _restore(args)
    service = GatewayService(bridge, host=host, port=port, state_file=path)
    host, port = service.address
    # flush so wrappers that pipe stdout can read the bound port immediately
    print(f"listening on http://{host}:{port}", flush=True)
    try:
        service.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        service.stop()
        bridge.close()
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (fatfs.NotFoundError, FileNotFoundError, NoSuchJobError) as exc:
        _warn(str(exc))
        code = 3
    except (DestFullError, fatfs.DiskFullError, fatfs.ExistsError,
            SourceInvalidError) as exc:
        _warn(str(exc))
        code = 5
    except SamePortError as exc:
        _warn(str(exc))
        code = 2
    except (BridgeError, fatfs.FatError, MscError, UsbBusError,
            BlockDeviceError) as exc:
        _warn(str(exc))
        code = 4
    return code


if __name__ == "__main__":
    sys.exit(main())

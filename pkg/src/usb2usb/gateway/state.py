"""Session state: which image is plugged into which port.

Each CLI invocation is a fresh process, so the plug state lives in a small
JSON file (default ./.usb2usb-state.json, overridable with --state or
USB2USB_STATE). Commands restore it before running and update it after
attach/detach, which lets `attach`, `ls`, `cp` compose across invocations
the way they would against one long-running device.
"""

import json
import os

from ..usb.bus import Port

DEFAULT_STATE_FILE = ".usb2usb-state.json"
ENV_VAR = "USB2USB_STATE"


def state_path(explicit=None):
    if explicit:
        return explicit
    return os.environ.get(ENV_VAR, DEFAULT_STATE_FILE)


def load(path):
    """Port -> {image, read_only} mapping; empty when no file yet."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        return {}
    except (json.JSONDecodeError, OSError):
        return {}
    ports = {}
    for name, rec in raw.get("ports", {}).items():
        if name in ("A", "B") and isinstance(rec, dict) and "image" in rec:
            ports[Port(name)] = {"image": str(rec["image"]),
                                 "read_only": bool(rec.get("read_only"))}
    return ports


def save(path, ports):
    data = {"ports": {port.value: rec for port, rec in ports.items()}}
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
    os.replace(tmp, path)


def restore(bridge, ports, warn):
    """Attach every recorded image; report (not raise) individual failures."""
    for port, rec in ports.items():
        try:
            bridge.attach_image(port, rec["image"],
                                read_only=rec["read_only"])
        except Exception as exc:       # noqa: BLE001 - keep other ports usable
            warn(f"port {port.value}: cannot attach {rec['image']}: {exc}")

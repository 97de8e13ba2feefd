"""Virtual two-port USB 2.0 bus.

Models attach/detach events, enumeration (address assignment plus descriptor
retrieval over real control transfers) and control/bulk transfer primitives
between the host side and attached device models. Transfers on one port are
serialized; the two ports are independent.
"""

import enum
import threading
import time
from dataclasses import dataclass

from . import descriptors as d
from .descriptors import (
    ConfigurationDescriptor,
    DescriptorSet,
    DeviceDescriptor,
    MalformedDescriptorError,
    SetupPacket,
)
from .device import ControlRequestError


class Port(enum.Enum):
    A = "A"
    B = "B"


class UsbBusError(Exception):
    pass


class PortOccupiedError(UsbBusError):
    pass


class PortEmptyError(UsbBusError):
    pass


class NoSuchDeviceError(UsbBusError):
    pass


class NoSuchEndpointError(UsbBusError):
    pass


class EndpointHaltedError(UsbBusError):
    """The addressed endpoint is halted; clear-halt is required first."""

    def __init__(self, endpoint):
        super().__init__(f"endpoint 0x{endpoint:02x} halted")
        self.endpoint = endpoint


class DeviceGoneError(UsbBusError):
    """The device left the bus before or during the transfer."""


@dataclass(frozen=True)
class EnumeratedDevice:
    port: Port
    address: int
    descriptors: DescriptorSet
    speed: str


class _Slot:
    def __init__(self, port):
        self.port = port
        self.model = None
        self.address = 0
        self.enumerated = None
        self.generation = 0
        self.lock = threading.RLock()


class UsbBus:
    def __init__(self, clock=time.time):
        self._clock = clock
        self._slots = {port: _Slot(port) for port in Port}
        self._next_address = 1
        self._listeners = []
        self.event_log = []

    # -- topology ------------------------------------------------------------

    def attach(self, port, model):
        slot = self._slots[port]
        with slot.lock:
            if slot.model is not None:
                raise PortOccupiedError(f"port {port.value} occupied")
            slot.model = model
            slot.address = 0
            slot.enumerated = None
            model.address = 0
            model.on_attached()
            self._log(port, "attach")
        self._notify("attach", port)

    def detach(self, port):
        slot = self._slots[port]
        with slot.lock:
            if slot.model is None:
                raise PortEmptyError(f"port {port.value} empty")
            model = slot.model
            slot.model = None
            slot.enumerated = None
            slot.address = 0
            slot.generation += 1
            model.on_detached()
            self._log(port, "detach")
        self._notify("detach", port)

    def device_at(self, port):
        return self._slots[port].enumerated

    def is_occupied(self, port):
        return self._slots[port].model is not None

    # -- enumeration -----------------------------------------------------------

    def enumerate(self, port):
        """Assign a bus address to the device on `port` and retrieve its full
        descriptor set, then select its configuration."""
        slot = self._slots[port]
        with slot.lock:
            if slot.model is None:
                raise PortEmptyError(f"port {port.value} empty")
            if slot.enumerated is not None:
                raise UsbBusError(f"port {port.value} already enumerated")

            raw = self._slot_control(slot, SetupPacket(
                0x80, d.REQ_GET_DESCRIPTOR, d.DESC_TYPE_DEVICE << 8, 0,
                d.DEVICE_DESC_LEN))
            device_desc = DeviceDescriptor.parse(raw)

            address = self._next_address
            self._next_address += 1
            self._slot_control(slot, SetupPacket(0x00, d.REQ_SET_ADDRESS, address, 0, 0))
            slot.address = address

            head = self._slot_control(slot, SetupPacket(
                0x80, d.REQ_GET_DESCRIPTOR, d.DESC_TYPE_CONFIGURATION << 8, 0,
                d.CONFIG_DESC_LEN))
            if len(head) != d.CONFIG_DESC_LEN:
                raise MalformedDescriptorError(
                    f"configuration header read returned {len(head)} bytes")
            total = int.from_bytes(head[2:4], "little")
            full = self._slot_control(slot, SetupPacket(
                0x80, d.REQ_GET_DESCRIPTOR, d.DESC_TYPE_CONFIGURATION << 8, 0, total))
            if len(full) != total:
                raise MalformedDescriptorError(
                    f"configuration total-length {total} != {len(full)} bytes returned")
            config = ConfigurationDescriptor.parse(full)

            descriptor_set = DescriptorSet(device_desc, [config]).validate()
            self._slot_control(slot, SetupPacket(
                0x00, d.REQ_SET_CONFIGURATION, config.value, 0, 0))

            slot.enumerated = EnumeratedDevice(
                port, address, descriptor_set, slot.model.speed)
            self._log(port, "enumerated", address)
        self._notify("enumerated", port)
        return slot.enumerated

    # -- transfers ---------------------------------------------------------------

    def control_transfer(self, address, setup, payload=b""):
        slot = self._find_address(address)
        return self._transfer(slot, lambda m: self._control(m, setup, payload))

    def bulk_out(self, address, endpoint, data):
        slot = self._find_address(address)
        self._check_endpoint(slot, endpoint, want_in=False)

        def run(model):
            if model.is_halted(endpoint):
                raise EndpointHaltedError(endpoint)
            accepted = model.handle_bulk_out(endpoint, bytes(data))
            return len(data) if accepted is None else accepted

        return self._transfer(slot, run)

    def bulk_in(self, address, endpoint, max_len):
        slot = self._find_address(address)
        self._check_endpoint(slot, endpoint, want_in=True)

        def run(model):
            if model.is_halted(endpoint):
                raise EndpointHaltedError(endpoint)
            data = model.handle_bulk_in(endpoint, max_len)
            if len(data) > max_len:
                raise UsbBusError(
                    f"device returned {len(data)} bytes, host asked {max_len}")
            return data

        return self._transfer(slot, run)

    # -- event fan-out ------------------------------------------------------------

    def add_listener(self, fn):
        """fn(kind, port) is called after attach/detach/enumerated events."""
        self._listeners.append(fn)

    # -- internals -----------------------------------------------------------------

    def _control(self, model, setup, payload):
        data = payload if not setup.is_device_to_host else b""
        result = model.handle_control(setup, data)
        if setup.is_device_to_host:
            result = result or b""
            return result[:setup.length]
        return b""

    def _transfer(self, slot, fn):
        with slot.lock:
            model = slot.model
            if model is None:
                raise DeviceGoneError(f"port {slot.port.value}: device gone")
            generation = slot.generation
            result = fn(model)
            # the model may have been yanked by a reentrant detach while the
            # handler ran; the in-flight transfer then resolves device-gone
            if slot.generation != generation or slot.model is not model:
                raise DeviceGoneError(f"port {slot.port.value}: device gone mid-transfer")
            return result

    def _slot_control(self, slot, setup, payload=b""):
        return self._transfer(slot, lambda m: self._control(m, setup, payload))

    def _find_address(self, address):
        for slot in self._slots.values():
            if slot.enumerated is not None and slot.address == address:
                return slot
        raise NoSuchDeviceError(f"no enumerated device at address {address}")

    def _check_endpoint(self, slot, endpoint, want_in):
        ep = slot.enumerated.descriptors.endpoint(endpoint)
        if ep is None or ep.transfer_type != d.XFER_BULK:
            raise NoSuchEndpointError(f"no bulk endpoint 0x{endpoint:02x}")
        if ep.is_in != want_in:
            raise NoSuchEndpointError(
                f"endpoint 0x{endpoint:02x} direction mismatch")

    def _log(self, port, event, address=None):
        line = f"{self._clock():.3f} port={port.value} event={event}"
        if address is not None:
            line += f" addr={address}"
        self.event_log.append(line)

    def _notify(self, kind, port):
        for fn in self._listeners:
            fn(kind, port)


__all__ = [
    "ControlRequestError",
    "DeviceGoneError",
    "EndpointHaltedError",
    "EnumeratedDevice",
    "NoSuchDeviceError",
    "NoSuchEndpointError",
    "Port",
    "PortEmptyError",
    "PortOccupiedError",
    "UsbBus",
    "UsbBusError",
]

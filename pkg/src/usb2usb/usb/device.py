"""Base class for emulated USB devices driven by the virtual bus.

Handles the standard control requests every device must answer during
enumeration (descriptor reads, address assignment, configuration, endpoint
halt bookkeeping); subclasses add class-specific control requests and bulk
traffic.
"""

from . import descriptors as d


class ControlRequestError(Exception):
    """The device stalled a control request it does not support."""


class UsbDeviceModel:
    def __init__(self, descriptor_set, strings=None, speed="full"):
        self.descriptors = descriptor_set.validate()
        self.strings = list(strings or [])
        self.speed = speed
        self.address = 0
        self.configured = False
        self.halted_endpoints = set()

    # -- hooks -------------------------------------------------------------

    def on_attached(self):
        pass

    def on_detached(self):
        pass

    def on_configured(self):
        pass

    def handle_class_control(self, setup, data):
        raise ControlRequestError(
            f"unsupported class request 0x{setup.request:02x}")

    def handle_bulk_out(self, endpoint, data):
        raise NotImplementedError

    def handle_bulk_in(self, endpoint, max_len):
        raise NotImplementedError

    # -- endpoint halt bookkeeping ------------------------------------------

    def halt_endpoint(self, address):
        self.halted_endpoints.add(address)

    def clear_halt(self, address):
        self.halted_endpoints.discard(address)

    def is_halted(self, address):
        return address in self.halted_endpoints

    # -- control pipe --------------------------------------------------------

    def handle_control(self, setup, data=b""):
        """Dispatch one control transfer. Returns response bytes for
        device-to-host requests, None for host-to-device ones."""
        if setup.type == d.TYPE_STANDARD:
            return self._handle_standard(setup, data)
        return self.handle_class_control(setup, data)

    def _handle_standard(self, setup, data):
        req = setup.request
        if req == d.REQ_GET_DESCRIPTOR:
            return self._get_descriptor(setup)
        if req == d.REQ_SET_ADDRESS:
            self.address = setup.value & 0x7F
            return None
        if req == d.REQ_SET_CONFIGURATION:
            self.configured = setup.value != 0
            self.halted_endpoints.clear()
            if self.configured:
                self.on_configured()
            return None
        if req == d.REQ_GET_CONFIGURATION:
            value = self.descriptors.configurations[0].value if self.configured else 0
            return bytes([value])
        if req == d.REQ_CLEAR_FEATURE:
            if setup.recipient == d.RECIP_ENDPOINT and setup.value == d.FEATURE_ENDPOINT_HALT:
                self.clear_halt(setup.index & 0xFF)
                return None
            return None
        if req == d.REQ_GET_STATUS:
            if setup.recipient == d.RECIP_ENDPOINT:
                halted = 1 if self.is_halted(setup.index & 0xFF) else 0
                return bytes([halted, 0])
            return b"\x00\x00"
        raise ControlRequestError(f"unsupported standard request {req}")

    def _get_descriptor(self, setup):
        dtype = setup.value >> 8
        index = setup.value & 0xFF
        if dtype == d.DESC_TYPE_DEVICE:
            raw = self.descriptors.device.pack()
        elif dtype == d.DESC_TYPE_CONFIGURATION:
            try:
                raw = self.descriptors.configurations[index].pack()
            except IndexError:
                raise ControlRequestError(f"no configuration {index}") from None
        elif dtype == d.DESC_TYPE_STRING:
            raw = self._string_descriptor(index)
        else:
            raise ControlRequestError(f"unsupported descriptor type {dtype}")
        return raw[:setup.length]

    def _string_descriptor(self, index):
        if index == 0:
            # supported language IDs: US English only
            return bytes([4, d.DESC_TYPE_STRING, 0x09, 0x04])
        try:
            text = self.strings[index - 1]
        except IndexError:
            raise ControlRequestError(f"no string descriptor {index}") from None
        encoded = text.encode("utf-16-le")
        return bytes([2 + len(encoded), d.DESC_TYPE_STRING]) + encoded

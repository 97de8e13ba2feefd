"""USB descriptor and setup-packet wire formats.

All multi-byte fields are little-endian. Serialized sizes are fixed:
18-byte device descriptor, 9-byte configuration header, 9-byte interface,
7-byte endpoint, 8-byte setup packet.
"""

import struct
from dataclasses import dataclass, field

DESC_TYPE_DEVICE = 1
DESC_TYPE_CONFIGURATION = 2
DESC_TYPE_STRING = 3
DESC_TYPE_INTERFACE = 4
DESC_TYPE_ENDPOINT = 5

ENDPOINT_DIR_IN = 0x80
XFER_CONTROL = 0
XFER_ISOCHRONOUS = 1
XFER_BULK = 2
XFER_INTERRUPT = 3

# Standard request codes
REQ_GET_STATUS = 0
REQ_CLEAR_FEATURE = 1
REQ_SET_FEATURE = 3
REQ_SET_ADDRESS = 5
REQ_GET_DESCRIPTOR = 6
REQ_GET_CONFIGURATION = 8
REQ_SET_CONFIGURATION = 9

FEATURE_ENDPOINT_HALT = 0

# bmRequestType fields
TYPE_STANDARD = 0
TYPE_CLASS = 1
TYPE_VENDOR = 2
RECIP_DEVICE = 0
RECIP_INTERFACE = 1
RECIP_ENDPOINT = 2

_DEVICE_FMT = "<BBHBBBBHHHBBBB"
_CONFIG_FMT = "<BBHBBBBB"
_INTERFACE_FMT = "<BBBBBBBBB"
_ENDPOINT_FMT = "<BBBBHB"
_SETUP_FMT = "<BBHHH"

DEVICE_DESC_LEN = struct.calcsize(_DEVICE_FMT)        # 18
CONFIG_DESC_LEN = struct.calcsize(_CONFIG_FMT)        # 9
INTERFACE_DESC_LEN = struct.calcsize(_INTERFACE_FMT)  # 9
ENDPOINT_DESC_LEN = struct.calcsize(_ENDPOINT_FMT)    # 7
SETUP_PACKET_LEN = struct.calcsize(_SETUP_FMT)        # 8


class MalformedDescriptorError(Exception):
    """A descriptor's declared length disagrees with its serialized bytes."""


@dataclass
class SetupPacket:
    request_type: int
    request: int
    value: int
    index: int
    length: int

    def pack(self):
        return struct.pack(_SETUP_FMT, self.request_type, self.request,
                           self.value, self.index, self.length)

    @classmethod
    def parse(cls, raw):
        if len(raw) != SETUP_PACKET_LEN:
            raise MalformedDescriptorError(f"setup packet must be 8 bytes, got {len(raw)}")
        return cls(*struct.unpack(_SETUP_FMT, raw))

    @property
    def is_device_to_host(self):
        return bool(self.request_type & 0x80)

    @property
    def type(self):
        return (self.request_type >> 5) & 0x3

    @property
    def recipient(self):
        return self.request_type & 0x1F


@dataclass
class DeviceDescriptor:
    usb_version: int = 0x0200
    device_class: int = 0
    device_subclass: int = 0
    device_protocol: int = 0
    max_packet_size0: int = 64
    vendor_id: int = 0
    product_id: int = 0
    device_version: int = 0x0100
    i_manufacturer: int = 0
    i_product: int = 0
    i_serial: int = 0
    num_configurations: int = 1

    def pack(self):
        return struct.pack(
            _DEVICE_FMT, DEVICE_DESC_LEN, DESC_TYPE_DEVICE, self.usb_version,
            self.device_class, self.device_subclass, self.device_protocol,
            self.max_packet_size0, self.vendor_id, self.product_id,
            self.device_version, self.i_manufacturer, self.i_product,
            self.i_serial, self.num_configurations)

    @classmethod
    def parse(cls, raw):
        if len(raw) != DEVICE_DESC_LEN:
            raise MalformedDescriptorError(f"device descriptor must be 18 bytes, got {len(raw)}")
        (length, dtype, usb_version, dclass, dsub, dproto, mps0, vid, pid,
         dver, iman, iprod, iser, ncfg) = struct.unpack(_DEVICE_FMT, raw)
        if length != DEVICE_DESC_LEN or dtype != DESC_TYPE_DEVICE:
            raise MalformedDescriptorError(
                f"device descriptor header invalid (bLength={length}, type={dtype})")
        return cls(usb_version, dclass, dsub, dproto, mps0, vid, pid, dver,
                   iman, iprod, iser, ncfg)


@dataclass
class EndpointDescriptor:
    address: int
    attributes: int
    max_packet_size: int
    interval: int = 0

    @property
    def is_in(self):
        return bool(self.address & ENDPOINT_DIR_IN)

    @property
    def transfer_type(self):
        return self.attributes & 0x3

    def pack(self):
        return struct.pack(_ENDPOINT_FMT, ENDPOINT_DESC_LEN, DESC_TYPE_ENDPOINT,
                           self.address, self.attributes, self.max_packet_size,
                           self.interval)

    @classmethod
    def parse(cls, raw):
        if len(raw) != ENDPOINT_DESC_LEN:
            raise MalformedDescriptorError(f"endpoint descriptor must be 7 bytes, got {len(raw)}")
        length, dtype, addr, attrs, mps, interval = struct.unpack(_ENDPOINT_FMT, raw)
        if length != ENDPOINT_DESC_LEN or dtype != DESC_TYPE_ENDPOINT:
            raise MalformedDescriptorError(
                f"endpoint descriptor header invalid (bLength={length}, type={dtype})")
        return cls(addr, attrs, mps, interval)


@dataclass
class InterfaceDescriptor:
    number: int = 0
    alternate: int = 0
    interface_class: int = 0
    interface_subclass: int = 0
    interface_protocol: int = 0
    i_interface: int = 0
    endpoints: list = field(default_factory=list)

    def pack(self):
        head = struct.pack(_INTERFACE_FMT, INTERFACE_DESC_LEN, DESC_TYPE_INTERFACE,
                           self.number, self.alternate, len(self.endpoints),
                           self.interface_class, self.interface_subclass,
                           self.interface_protocol, self.i_interface)
        return head + b"".join(ep.pack() for ep in self.endpoints)


@dataclass
class ConfigurationDescriptor:
    value: int = 1
    attributes: int = 0x80
    max_power: int = 50
    i_configuration: int = 0
    interfaces: list = field(default_factory=list)

    def pack(self):
        body = b"".join(iface.pack() for iface in self.interfaces)
        total = CONFIG_DESC_LEN + len(body)
        head = struct.pack(_CONFIG_FMT, CONFIG_DESC_LEN, DESC_TYPE_CONFIGURATION,
                           total, len(self.interfaces), self.value,
                           self.i_configuration, self.attributes, self.max_power)
        return head + body

    @classmethod
    def parse(cls, raw):
        """Parse a full configuration blob (header plus interface/endpoint
        descriptors), validating every declared length against the bytes."""
        if len(raw) < CONFIG_DESC_LEN:
            raise MalformedDescriptorError("configuration blob shorter than its header")
        (length, dtype, total, num_ifaces, value, i_cfg, attrs,
         max_power) = struct.unpack(_CONFIG_FMT, raw[:CONFIG_DESC_LEN])
        if length != CONFIG_DESC_LEN or dtype != DESC_TYPE_CONFIGURATION:
            raise MalformedDescriptorError(
                f"configuration header invalid (bLength={length}, type={dtype})")
        if total != len(raw):
            raise MalformedDescriptorError(
                f"configuration total-length {total} != actual {len(raw)} bytes")
        cfg = cls(value, attrs, max_power, i_cfg, [])
        off = CONFIG_DESC_LEN
        current = None
        while off < len(raw):
            if off + 2 > len(raw):
                raise MalformedDescriptorError("truncated descriptor header")
            sub_len, sub_type = raw[off], raw[off + 1]
            if sub_len < 2 or off + sub_len > len(raw):
                raise MalformedDescriptorError(
                    f"descriptor at offset {off} overruns blob (bLength={sub_len})")
            chunk = raw[off:off + sub_len]
            if sub_type == DESC_TYPE_INTERFACE:
                if sub_len != INTERFACE_DESC_LEN:
                    raise MalformedDescriptorError(
                        f"interface descriptor bLength {sub_len} != {INTERFACE_DESC_LEN}")
                (_, _, num, alt, num_eps, iclass, isub, iproto,
                 i_iface) = struct.unpack(_INTERFACE_FMT, chunk)
                current = InterfaceDescriptor(num, alt, iclass, isub, iproto, i_iface, [])
                current._declared_endpoints = num_eps
                cfg.interfaces.append(current)
            elif sub_type == DESC_TYPE_ENDPOINT:
                if current is None:
                    raise MalformedDescriptorError("endpoint descriptor before any interface")
                current.endpoints.append(EndpointDescriptor.parse(chunk))
            else:
                # class- or vendor-specific descriptor: skip per its bLength
                pass
            off += sub_len
        if len(cfg.interfaces) != num_ifaces:
            raise MalformedDescriptorError(
                f"configuration declares {num_ifaces} interfaces, found {len(cfg.interfaces)}")
        for iface in cfg.interfaces:
            declared = getattr(iface, "_declared_endpoints", len(iface.endpoints))
            if declared != len(iface.endpoints):
                raise MalformedDescriptorError(
                    f"interface {iface.number} declares {declared} endpoints, "
                    f"found {len(iface.endpoints)}")
            del iface._declared_endpoints
        return cfg


@dataclass
class DescriptorSet:
    """Everything a device advertises: its device descriptor plus the
    configuration tree. Emulated flash drives have exactly one configuration."""
    device: DeviceDescriptor
    configurations: list

    def validate(self):
        if self.device.num_configurations != len(self.configurations):
            raise MalformedDescriptorError(
                f"device declares {self.device.num_configurations} configurations, "
                f"set holds {len(self.configurations)}")
        for cfg in self.configurations:
            # pack/parse round-trip enforces all length invariants
            ConfigurationDescriptor.parse(cfg.pack())
        return self

    def endpoint(self, address):
        for cfg in self.configurations:
            for iface in cfg.interfaces:
                for ep in iface.endpoints:
                    if ep.address == address:
                        return ep
        return None

    def bulk_endpoints(self):
        eps = []
        for cfg in self.configurations:
            for iface in cfg.interfaces:
                eps.extend(ep for ep in iface.endpoints
                           if ep.transfer_type == XFER_BULK)
        return eps

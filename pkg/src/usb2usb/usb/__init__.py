from .descriptors import (
    ConfigurationDescriptor,
    DescriptorSet,
    DeviceDescriptor,
    EndpointDescriptor,
    InterfaceDescriptor,
    MalformedDescriptorError,
    SetupPacket,
)
from .device import UsbDeviceModel
from .bus import (
    DeviceGoneError,
    EndpointHaltedError,
    EnumeratedDevice,
    NoSuchDeviceError,
    NoSuchEndpointError,
    Port,
    PortEmptyError,
    PortOccupiedError,
    UsbBus,
    UsbBusError,
)

__all__ = [
    "ConfigurationDescriptor",
    "DescriptorSet",
    "DeviceDescriptor",
    "DeviceGoneError",
    "EndpointDescriptor",
    "EndpointHaltedError",
    "EnumeratedDevice",
    "InterfaceDescriptor",
    "MalformedDescriptorError",
    "NoSuchDeviceError",
    "NoSuchEndpointError",
    "Port",
    "PortEmptyError",
    "PortOccupiedError",
    "SetupPacket",
    "UsbBus",
    "UsbBusError",
    "UsbDeviceModel",
]

"""usb2usb: a desk-scale software emulation of a standalone USB-to-USB
file transfer bridge.

Two virtual USB host ports (A and B), emulated SCSI flash drives backed by
raw disk images, a FAT16/FAT32 driver, and a copy engine driven through a
CLI or a small HTTP + event-stream service.
"""

__version__ = "0.1.0"

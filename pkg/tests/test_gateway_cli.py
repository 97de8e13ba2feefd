"""CLI behavior: output text, exit codes, and cross-invocation state.

Every invocation goes through cli.main(argv) in-process; stdout/stderr are
captured with capsys. Each test uses its own --state file so invocations
compose the way separate shell commands would.
"""

import json

import pytest

from usb2usb import fatfs
from usb2usb.blockdev import BlockImage
from usb2usb.bridge import CHUNK_SIZE
from usb2usb.gateway import cli
from usb2usb.gateway import state as state_mod


@pytest.fixture
def sandbox(tmp_path, capsys):
    """Callable runner bound to a per-test state file."""
    state = str(tmp_path / "state.json")

    def run(*argv):
        code = cli.main(["--state", state] + list(argv))
        captured = capsys.readouterr()
        return code, captured.out.splitlines(), captured.err.splitlines()

    run.state = state
    run.tmp = tmp_path
    return run


def make_fat16(tmp_path, name, files=None, dirs=(), sectors=4150,
               label="DISK"):
    path = str(tmp_path / name)
    dev = BlockImage.create(path, sectors)
    fatfs.mkfs(dev, fatfs.FAT16, volume_label=label)
    vol = fatfs.FatVolume(dev)
    for d in dirs:
        vol.create_dir(d)
    for p, data in (files or {}).items():
        vol.write_file(p, data)
    dev.close()
    return path


# -- attach / detach ---------------------------------------------------------

def test_attach_ready_output_and_state(sandbox):
    img = make_fat16(sandbox.tmp, "a.img", label="ALPHA")
    code, out, err = sandbox("attach", "A", img)
    assert code == 0
    assert err == []
    assert out[0] == "port A: ready"
    assert out[1].startswith("label=ALPHA variant=FAT16 total=")
    recorded = json.loads(open(sandbox.state).read())
    assert recorded == {"ports": {"A": {"image": img, "read_only": False}}}


def test_attach_unformatted_image_exits_4(sandbox):
    path = str(sandbox.tmp / "blank.img")
    BlockImage.create(path, 4150).close()
    code, out, _ = sandbox("attach", "A", path)
    assert code == 4
    assert out[0].startswith("port A: failed (")


def test_attach_missing_image_exits_3(sandbox):
    code, _, err = sandbox("attach", "A", str(sandbox.tmp / "nope.img"))
    assert code == 3
    assert err and err[0].startswith("usb2usb: ")


def test_detach_clears_state(sandbox):
    img = make_fat16(sandbox.tmp, "a.img")
    sandbox("attach", "A", img)
    code, out, _ = sandbox("detach", "A")
    assert code == 0
    assert out == ["port A: empty"]
    assert json.loads(open(sandbox.state).read()) == {"ports": {}}


def test_attach_read_only_recorded(sandbox):
    img = make_fat16(sandbox.tmp, "a.img")
    code, _, _ = sandbox("attach", "A", img, "--read-only")
    assert code == 0
    recorded = json.loads(open(sandbox.state).read())
    assert recorded["ports"]["A"]["read_only"] is True


def test_state_survives_across_invocations(sandbox):
    img = make_fat16(sandbox.tmp, "a.img", files={"/kept.txt": b"here"})
    sandbox("attach", "A", img)
    code, out, _ = sandbox("ls", "A")
    assert code == 0
    assert out == ["-          4 kept.txt"]


def test_missing_state_image_warns_then_port_empty(sandbox, tmp_path):
    img = make_fat16(sandbox.tmp, "gone.img")
    sandbox("attach", "A", img)
    import os
    os.unlink(img)
    code, _, err = sandbox("info", "A")
    assert code == 4
    assert any("cannot attach" in line for line in err)
    assert any("not ready" in line for line in err)


def test_corrupt_state_file_treated_as_empty(sandbox):
    with open(sandbox.state, "w") as fh:
        fh.write("{ not json")
    code, _, err = sandbox("ls", "A")
    assert code == 4
    assert any("status: empty" in line for line in err)


def test_env_var_names_state_file(tmp_path, capsys, monkeypatch):
    img = make_fat16(tmp_path, "a.img")
    env_state = str(tmp_path / "env-state.json")
    monkeypatch.setenv(state_mod.ENV_VAR, env_state)
    assert cli.main(["attach", "A", img]) == 0
    capsys.readouterr()
    assert json.loads(open(env_state).read())["ports"]["A"]["image"] == img


def test_state_path_precedence(monkeypatch):
    monkeypatch.delenv(state_mod.ENV_VAR, raising=False)
    assert state_mod.state_path() == state_mod.DEFAULT_STATE_FILE
    monkeypatch.setenv(state_mod.ENV_VAR, "/tmp/via-env.json")
    assert state_mod.state_path() == "/tmp/via-env.json"
    assert state_mod.state_path("/tmp/explicit.json") == "/tmp/explicit.json"


# -- mkfs ---------------------------------------------------------------------

def test_mkfs_creates_and_formats(sandbox):
    path = str(sandbox.tmp / "new.img")
    code, out, _ = sandbox("mkfs", path, "--variant", "fat16",
                           "--size-mib", "16", "--label", "FRESH")
    assert code == 0
    assert out[0] == f"{path}: FAT16, 32481 clusters"
    total = 32481 * 512
    assert out[1] == f"label=FRESH variant=FAT16 total={total} free={total}"


def test_mkfs_fat32_cluster_count(sandbox):
    path = str(sandbox.tmp / "big.img")
    code, out, _ = sandbox("mkfs", path, "--variant", "fat32",
                           "--size-mib", "64")
    assert code == 0
    assert out[0] == f"{path}: FAT32, 129022 clusters"
    assert "label=NO NAME variant=FAT32" in out[1]


def test_mkfs_spc_honored(sandbox):
    path = str(sandbox.tmp / "spc.img")
    code, out, _ = sandbox("mkfs", path, "--variant", "fat16",
                           "--size-mib", "16", "--spc", "4")
    assert code == 0
    assert out[0] == f"{path}: FAT16, 8167 clusters"


def test_mkfs_missing_image_needs_size(sandbox):
    path = str(sandbox.tmp / "absent.img")
    code, _, err = sandbox("mkfs", path, "--variant", "fat16")
    assert code == 3
    assert any("--size-mib" in line for line in err)


def test_mkfs_variant_size_mismatch_exits_4(sandbox):
    path = str(sandbox.tmp / "small.img")
    code, _, err = sandbox("mkfs", path, "--variant", "fat32",
                           "--size-mib", "16")
    assert code == 4
    assert err


def test_mkfs_bad_label_exits_4(sandbox):
    path = str(sandbox.tmp / "lbl.img")
    code, _, err = sandbox("mkfs", path, "--variant", "fat16",
                           "--size-mib", "16", "--label", "BAD*LABEL")
    assert code == 4
    assert err


# -- ls / info ----------------------------------------------------------------

def test_ls_sorted_dirs_first_exact_lines(sandbox):
    img = make_fat16(sandbox.tmp, "a.img",
                     dirs=("/music", "/Docs"),
                     files={"/zeta.bin": b"z" * 1234,
                            "/Alpha.txt": b"a",
                            "/music/song.ogg": b"s" * 77})
    sandbox("attach", "A", img)
    code, out, _ = sandbox("ls", "A")
    assert code == 0
    assert out == [
        "d          0 Docs",
        "d          0 music",
        "-          1 Alpha.txt",
        "-       1234 zeta.bin",
    ]
    code, out, _ = sandbox("ls", "A", "/music")
    assert code == 0
    assert out == ["-         77 song.ogg"]


def test_ls_missing_path_exits_3(sandbox):
    img = make_fat16(sandbox.tmp, "a.img")
    sandbox("attach", "A", img)
    code, _, err = sandbox("ls", "A", "/ghost")
    assert code == 3
    assert err


def test_ls_empty_port_exits_4(sandbox):
    code, _, err = sandbox("ls", "B")
    assert code == 4
    assert any("port B not ready" in line for line in err)


def test_info_line_exact(sandbox):
    img = make_fat16(sandbox.tmp, "a.img", label="SPACE",
                     files={"/pad.bin": bytes(2048)})
    sandbox("attach", "A", img)
    code, out, _ = sandbox("info", "A")
    assert code == 0
    total = 4085 * 512
    free = (4085 - 4) * 512
    assert out == [f"label=SPACE variant=FAT16 total={total} free={free}"]


# -- cp -----------------------------------------------------------------------

def attach_pair(sandbox, a_files=None, a_dirs=(), b_files=None,
                a_sectors=4150, b_sectors=4150):
    a = make_fat16(sandbox.tmp, "cpa.img", files=a_files, dirs=a_dirs,
                   sectors=a_sectors, label="SRC")
    b = make_fat16(sandbox.tmp, "cpb.img", files=b_files,
                   sectors=b_sectors, label="DST")
    sandbox("attach", "A", a)
    sandbox("attach", "B", b)
    return a, b


def test_cp_progress_deciles_and_done(sandbox):
    payload = bytes(5 * CHUNK_SIZE)
    attach_pair(sandbox, a_files={"/big.bin": payload}, a_sectors=4150,
                b_sectors=4150)
    code, out, err = sandbox("cp", "A:/big.bin", "B:/big.bin")
    assert code == 0
    assert err == []
    total = len(payload)
    assert out[0] == f"job-1: A:/big.bin -> B:/big.bin ({total} bytes)"
    assert out[1] == f"job-1:   0% 0/{total}"
    pcts = [line.split()[1] for line in out[1:-1]]
    assert pcts == ["0%", "20%", "40%", "60%", "80%", "100%"]
    copied = [int(line.split()[2].split("/")[0]) for line in out[1:-1]]
    assert copied == sorted(copied)
    assert out[-1] == f"job-1: done ({total} bytes)"


def test_cp_copies_bytes_faithfully(sandbox):
    payload = bytes((i * 13 + 5) % 256 for i in range(100_000))
    _, b = attach_pair(sandbox, a_files={"/data.bin": payload})
    code, _, _ = sandbox("cp", "A:/data.bin", "B:/data.bin")
    assert code == 0
    with BlockImage(b, read_only=True) as dev:
        assert fatfs.FatVolume(dev).read_file("/data.bin") == payload


def test_cp_zero_byte_file(sandbox):
    attach_pair(sandbox, a_files={"/empty.bin": b""})
    code, out, _ = sandbox("cp", "A:/empty.bin", "B:/empty.bin")
    assert code == 0
    assert out[-1] == "job-1: done (0 bytes)"


def test_cp_recursive_directory(sandbox):
    attach_pair(sandbox, a_dirs=("/docs",),
                a_files={"/docs/one.txt": b"1", "/docs/two.txt": b"22"})
    code, out, _ = sandbox("cp", "A:/docs", "B:/", "--recursive")
    assert code == 0
    assert out[-1] == "job-1: done (3 bytes)"
    code, out, _ = sandbox("ls", "B", "/docs")
    assert code == 0
    assert out == ["-          1 one.txt", "-          2 two.txt"]


def test_cp_directory_without_recursive_exits_5(sandbox):
    attach_pair(sandbox, a_dirs=("/docs",))
    code, _, err = sandbox("cp", "A:/docs", "B:/")
    assert code == 5
    assert any("use recursive" in line for line in err)


def test_cp_missing_source_exits_3(sandbox):
    attach_pair(sandbox)
    code, _, err = sandbox("cp", "A:/ghost.bin", "B:/ghost.bin")
    assert code == 3
    assert err


def test_cp_same_port_exits_2(sandbox):
    attach_pair(sandbox, a_files={"/f.bin": b"x"})
    code, _, err = sandbox("cp", "A:/f.bin", "A:/g.bin")
    assert code == 2
    assert any("must differ" in line for line in err)


def test_cp_existing_dest_exits_5_overwrite_passes(sandbox):
    _, b = attach_pair(sandbox, a_files={"/f.bin": b"new"},
                       b_files={"/f.bin": b"old"})
    code, _, err = sandbox("cp", "A:/f.bin", "B:/f.bin")
    assert code == 5
    assert any("exists on destination" in line for line in err)
    code, _, _ = sandbox("cp", "A:/f.bin", "B:/f.bin", "--overwrite")
    assert code == 0
    with BlockImage(b, read_only=True) as dev:
        assert fatfs.FatVolume(dev).read_file("/f.bin") == b"new"


def test_cp_dest_full_exits_5(sandbox):
    payload = bytes(4200 * 512)   # needs 4200 clusters; B only has 4085
    attach_pair(sandbox, a_files={"/big.bin": payload}, a_sectors=4150 * 2,
                b_sectors=4150)
    code, _, err = sandbox("cp", "A:/big.bin", "B:/big.bin")
    assert code == 5
    assert any("clusters" in line for line in err)


def test_cp_read_only_destination_exits_5(sandbox):
    a = make_fat16(sandbox.tmp, "roa.img", files={"/f.bin": b"x"})
    b = make_fat16(sandbox.tmp, "rob.img")
    sandbox("attach", "A", a)
    sandbox("attach", "B", b, "--read-only")
    code, _, err = sandbox("cp", "A:/f.bin", "B:/f.bin")
    assert code == 5
    assert any("failed" in line for line in err)


# -- fsck -----------------------------------------------------------------------

def test_fsck_clean_image(sandbox):
    img = make_fat16(sandbox.tmp, "ok.img", files={"/x.bin": b"fine"})
    code, out, _ = sandbox("fsck", img)
    assert code == 0
    assert out == ["clean"]


def test_fsck_error_findings_exit_4(sandbox):
    img = make_fat16(sandbox.tmp, "bad.img")
    with open(img, "r+b") as fh:      # orphan cluster 50 in both FAT copies
        for base in (512 * 1, 512 * 17):
            fh.seek(base + 2 * 50)
            fh.write(b"\xff\xff")
    code, out, _ = sandbox("fsck", img)
    assert code == 4
    assert out == ["error lost-clusters / 1 allocated clusters unreachable: 50"]


def test_fsck_warn_only_exits_0(sandbox):
    path = str(sandbox.tmp / "warn.img")
    dev = BlockImage.create(path, 131072)
    fatfs.mkfs(dev, fatfs.FAT32)
    dev.close()
    with open(path, "r+b") as fh:     # break the FSInfo lead signature
        fh.seek(512)
        fh.write(b"\x00\x00\x00\x00")
    code, out, _ = sandbox("fsck", path)
    assert code == 0
    assert out == ["warn fsinfo-bad / missing FSInfo signature"]


def test_fsck_missing_image_exits_3(sandbox):
    code, _, err = sandbox("fsck", str(sandbox.tmp / "nothing.img"))
    assert code == 3
    assert err


# -- argument validation --------------------------------------------------------

def test_bad_port_is_usage_error(sandbox, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--state", sandbox.state, "ls", "C"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_bad_cp_target_is_usage_error(sandbox, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--state", sandbox.state, "cp", "A:relative", "B:/ok"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_unknown_command_is_usage_error(sandbox, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--state", sandbox.state, "frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()

# Copyright 2026 The ntts Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent float64 reference values for the unit tests.

Usage: python3 derive.py path/to/ntts

Every number printed here is frozen into a test under tests/. The script
shares no code with the C++ library: it reads weight files through its own
parser and evaluates every formula with numpy.
"""

import json
import math
import struct
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

TINY_CONFIG = {
    "frontend": {
        "vocab_size": 8, "embed_dim": 4, "encoder_units": 4,
        "decoder_units": 6, "prenet_dim0": 4, "prenet_dim1": 4,
        "attention_dim": 4, "location_kernels": 2, "location_kernel_width": 3,
    },
    "vocoder": {"hidden": 4, "embed_dim": 2, "head_hidden": 3},
}


def read_weights(path):
    data = Path(path).read_bytes()
    assert data[:7] == b"NTTSW01" and data[7] == 1
    (count,) = struct.unpack_from("<I", data, 8)
    pos, out = 12, {}
    for _ in range(count):
        (name_len,) = struct.unpack_from("<I", data, pos)
        pos += 4
        name = data[pos:pos + name_len].decode()
        pos += name_len
        assert data[pos] == 0
        (rank,) = struct.unpack_from("<I", data, pos + 1)
        pos += 5
        dims = struct.unpack_from("<%dI" % rank, data, pos)
        pos += 4 * rank
        n = int(np.prod(dims)) if rank else 1
        values = np.frombuffer(data, "<f4", n, pos).astype(np.float64)
        pos += 4 * n
        out[name] = values.reshape(dims)
    assert pos == len(data)
    return out


def sigmoid(x):
    return 1.0 / (1.0 + np.exp(-x))


def split_pair(w, h, prev_code, cond, noise):
    """One split-state pair; noise holds 2 x 256 Gumbel values."""
    hidden = h.size
    half = hidden // 2
    L = w["vocoder.R"] @ h
    bias = w["vocoder.gate_bias"]
    h_new = h.copy()

    def half_step(offset, w_x, code):
        x = w_x @ w["vocoder.embed"][code]
        for j in range(half):
            iz, ir, i_n = offset + j, hidden + offset + j, 2 * hidden + offset + j
            z = sigmoid(L[iz] + cond[iz] + bias[iz] + x[j])
            r = sigmoid(L[ir] + cond[ir] + bias[ir] + x[half + j])
            n = math.tanh(r * L[i_n] + cond[i_n] + bias[i_n] + x[2 * half + j])
            h_new[offset + j] = z * h[offset + j] + (1 - z) * n

    def sample(prefix, hv, g):
        a = np.maximum(w[prefix + ".0.W"] @ hv + w[prefix + ".0.b"], 0.0)
        logits = w[prefix + ".1.W"] @ a + w[prefix + ".1.b"]
        return int(np.argmax(logits + g)), logits

    half_step(0, w["vocoder.W_xA"], prev_code)
    first, logits_a = sample("vocoder.head_A", h_new[:half], noise[:256])
    half_step(half, w["vocoder.W_xB"], first)
    second, logits_b = sample("vocoder.head_B", h_new[half:], noise[256:])
    return first, second, h_new, logits_a, logits_b


def vocoder_values(ntts):
    with tempfile.TemporaryDirectory() as tmp:
        cfg = Path(tmp) / "tiny.json"
        cfg.write_text(json.dumps(TINY_CONFIG))
        out = Path(tmp) / "tiny.nttsw"
        subprocess.run([ntts, "gen-weights", "--seed", "5", "--config",
                        str(cfg), "--out", str(out)], check=True)
        w = read_weights(out)
    h = np.array([0.1, -0.2, 0.3, -0.4])
    cond = np.linspace(-0.3, 0.3, 12)
    noise = np.zeros(512)
    first, second, h1, la, lb = split_pair(w, h, 128, cond, noise)
    print("split pair (seed 5, tiny config, zero noise):")
    print("  codes", first, second)
    print("  h'", ", ".join("%.9g" % v for v in h1))
    print("  logits_a[0:3]", ", ".join("%.9g" % v for v in la[:3]))
    # Second pair continues from the first.
    noise2 = np.zeros(512)
    noise2[7] = 50.0  # forces code 7 for the first sample
    f2, s2, h2, _, _ = split_pair(w, h1, second, cond, noise2)
    print("  next pair codes", f2, s2)
    print("  next h'", ", ".join("%.9g" % v for v in h2))


def mulaw_values():
    mu = 255.0

    def enc(s):
        s = min(1.0, max(-1.0, s))
        m = math.copysign(math.log1p(mu * abs(s)) / math.log1p(mu), s)
        return min(255, max(0, math.floor((m + 1) * 127.5 + 0.5)))

    def dec(c):
        m = c / 127.5 - 1
        return math.copysign(((1 + mu) ** abs(m) - 1) / mu, m)

    samples = [-0.9, -0.25, -0.001, 0.001, 0.03, 0.5, 0.77]
    print("mulaw encode", [enc(s) for s in samples])
    codes = [1, 64, 127, 129, 200, 254]
    print("mulaw decode", ", ".join("%.9g" % dec(c) for c in codes))


def mel_values():
    sr, n_fft, win, hop, n_mels = 24000, 1024, 600, 240, 80
    n = np.arange(2400)
    x = 0.5 * np.sin(2 * np.pi * 440 * n / sr) + 0.25 * np.sin(
        2 * np.pi * 1830 * n / sr)
    y = np.empty_like(x)
    y[0] = x[0]
    y[1:] = x[1:] - 0.86 * x[:-1]

    def hz_to_mel(f):
        return 2595 * np.log10(1 + f / 700)

    def mel_to_hz(m):
        return 700 * (10 ** (m / 2595) - 1)

    edges = mel_to_hz(np.linspace(hz_to_mel(0.0), hz_to_mel(12000.0),
                                  n_mels + 2))
    freqs = np.arange(n_fft // 2 + 1) * sr / n_fft
    bank = np.zeros((n_mels, freqs.size))
    for m in range(n_mels):
        left, center, right = edges[m], edges[m + 1], edges[m + 2]
        up = (freqs > left) & (freqs <= center)
        down = (freqs > center) & (freqs < right)
        bank[m, up] = (freqs[up] - left) / (center - left)
        bank[m, down] = (right - freqs[down]) / (right - center)
    window = 0.5 - 0.5 * np.cos(2 * np.pi * np.arange(win) / win)
    full = np.zeros(n_fft)
    off = (n_fft - win) // 2
    full[off:off + win] = window
    padded = np.pad(y, n_fft // 2, mode="reflect")
    frames = []
    for t in range((y.size + hop - 1) // hop):
        seg = padded[t * hop:t * hop + n_fft] * full
        mag = np.abs(np.fft.rfft(seg))
        frames.append(np.log(np.maximum(bank @ mag, 1e-5)))
    mel = np.array(frames)
    print("mel frames", mel.shape[0])
    for t in (0, 5, 9):
        print("  frame %d bins 0,10,40,79:" % t,
              ", ".join("%.6f" % mel[t, b] for b in (0, 10, 40, 79)))
    print("  bank[10, 12..15]", ", ".join("%.9g" % v for v in bank[10, 12:16]))


def upsample_values():
    w = 2 * np.pi * np.array([21000.0, 3000.0]) / 48000
    ratio = (1 + np.cos(w[0])) / (1 + np.cos(w[1]))
    print("image gain dB %.6f" % (20 * np.log10(ratio)))


def file_values():
    samples = [0.0, 0.5, -0.25, 1.0, -1.0]
    pcm = b"".join(struct.pack("<h", int(math.floor(s * 32767 + 0.5)) if s >= 0
                               else -int(math.floor(-s * 32767 + 0.5)))
                   for s in samples)
    header = b"RIFF" + struct.pack("<I", 36 + len(pcm)) + b"WAVEfmt " + \
        struct.pack("<IHHIIHH", 16, 1, 1, 24000, 48000, 2, 16) + b"data" + \
        struct.pack("<I", len(pcm))
    print("wav hex", (header + pcm).hex())
    body = b"NTTSW01" + bytes([1]) + struct.pack("<I", 1)
    name = b"w"
    body += struct.pack("<I", len(name)) + name + bytes([0])
    body += struct.pack("<I2I", 2, 1, 2) + struct.pack("<2f", 1.5, -2.0)
    print("weights hex", body.hex())


def activation_values():
    xs = [-3.0, -0.5, 0.25, 2.0, 10.0]
    print("exp", ", ".join("%.9g" % math.exp(x) for x in xs))
    print("sigmoid", ", ".join("%.9g" % (1 / (1 + math.exp(-x))) for x in xs))
    print("tanh", ", ".join("%.9g" % math.tanh(x) for x in xs))
    print("log 0.001 0.3 7 1e6", ", ".join(
        "%.9g" % math.log(x) for x in (0.001, 0.3, 7.0, 1e6)))
    sm = np.exp([1.0, 2.0, 3.0, 4.0])
    print("softmax 1..4", ", ".join("%.9g" % v for v in sm / sm.sum()))


def main():
    ntts = sys.argv[1] if len(sys.argv) > 1 else "build/tools/ntts"
    vocoder_values(ntts)
    mulaw_values()
    mel_values()
    upsample_values()
    file_values()
    activation_values()


if __name__ == "__main__":
    main()

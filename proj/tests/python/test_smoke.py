"""End-to-end checks of the python bindings against numpy references."""

import numpy as np
import pytest

import qst


def reference_ssim(a, b, peak):
    """Straight numpy transcription of the windowed SSIM definition:
    11x11 Gaussian window (sigma 1.5), valid positions only."""
    size, sigma = 11, 1.5
    ax = np.arange(size) - (size - 1) / 2.0
    g = np.exp(-(ax[:, None] ** 2 + ax[None, :] ** 2) / (2 * sigma**2))
    w = g / g.sum()
    c1, c2 = (0.01 * peak) ** 2, (0.03 * peak) ** 2

    h, ww = a.shape
    vals = []
    for r in range(h - size + 1):
        for c in range(ww - size + 1):
            pa = a[r : r + size, c : c + size]
            pb = b[r : r + size, c : c + size]
            mu_a = (w * pa).sum()
            mu_b = (w * pb).sum()
            var_a = (w * (pa - mu_a) ** 2).sum()
            var_b = (w * (pb - mu_b) ** 2).sum()
            cov = (w * (pa - mu_a) * (pb - mu_b)).sum()
            vals.append(
                ((2 * mu_a * mu_b + c1) * (2 * cov + c2))
                / ((mu_a**2 + mu_b**2 + c1) * (var_a + var_b + c2))
            )
    return float(np.mean(vals))


def test_field_numpy_roundtrip():
    sig = qst.make_signal(128, 3)
    arr = sig.to_numpy()
    assert arr.shape == (128,)
    assert np.array_equal(qst.Field.from_numpy(arr).to_numpy(), arr)

    img = qst.make_image(32, 3)
    arr2 = img.to_numpy()
    assert arr2.shape == (32, 32)
    assert np.array_equal(qst.Field.from_numpy(arr2).to_numpy(), arr2)


def test_synth_determinism():
    a = qst.make_signal(256, 7).to_numpy()
    b = qst.make_signal(256, 7).to_numpy()
    assert np.array_equal(a, b)
    assert a.min() >= 0.0


def test_corrupt_hits_target_snr():
    sig = qst.make_signal(256, 1)
    for model in (qst.NoiseModel.Poisson, qst.NoiseModel.SignalDependentGaussian):
        noisy, snr = qst.corrupt(sig, model, 15.0, 42)
        clean = sig.to_numpy()
        diff = noisy.to_numpy() - clean
        expected = 10 * np.log10((clean**2).sum() / (diff**2).sum())
        assert snr == pytest.approx(expected, abs=1e-12)
        assert abs(snr - 15.0) < 1.5  # small field, loose statistical band


def test_psnr_matches_numpy():
    a = qst.make_image(32, 5)
    noisy, _ = qst.corrupt(a, qst.NoiseModel.Poisson, 15.0, 9)
    an, nn = a.to_numpy(), noisy.to_numpy()
    mse = ((an - nn) ** 2).mean()
    want = 10 * np.log10(an.max() ** 2 / mse)
    assert qst.psnr_db(a, noisy) == pytest.approx(want, rel=1e-12)


def test_ssim_matches_numpy_reference():
    clean = qst.make_image(32, 5)
    noisy, _ = qst.corrupt(clean, qst.NoiseModel.Poisson, 15.0, 11)
    a, b = clean.to_numpy(), noisy.to_numpy()
    want = reference_ssim(a, b, peak=a.max())
    assert qst.ssim(clean, noisy) == pytest.approx(want, abs=1e-10)


def test_eigendecomposition_properties():
    sig = qst.make_signal(64, 2)
    H = qst.build_hamiltonian(sig, 2.0)
    basis = qst.eig_full(H)
    V = np.stack([basis.vector(i) for i in range(basis.count)])
    assert np.allclose(V @ V.T, np.eye(64), atol=1e-10)
    evs = basis.eigenvalues
    assert np.all(np.diff(evs) <= 1e-12)  # descending storage order
    for i in (0, 31, 63):
        r = H.apply(basis.vector(i)) - evs[i] * basis.vector(i)
        assert np.linalg.norm(r) <= 1e-8 * max(1.0, abs(evs[i]))


def test_partial_matches_full_low_end():
    sig = qst.make_signal(96, 4)
    H = qst.build_hamiltonian(sig, 1.0)
    full = qst.eig_full(H)
    part = qst.eig_partial(H, 6, qst.SpectrumEnd.Lowest)
    assert part.eigenvalues == pytest.approx(full.eigenvalues[-6:], abs=1e-8)


def test_pipeline_identity_and_denoising():
    sig = qst.make_signal(256, 1)
    ident = qst.PipelineConfig(ratio=1.0, sigma=0.0, s=256, rho=1.0)
    out = qst.denoise_pipeline(sig, ident)
    err = np.linalg.norm(out.to_numpy() - sig.to_numpy())
    assert err <= 1e-8 * np.linalg.norm(sig.to_numpy())

    noisy, _ = qst.corrupt(sig, qst.NoiseModel.Poisson, 15.0, 42)
    cfg = qst.PipelineConfig(ratio=80.0, sigma=2.0, s=48, rho=48.0)
    den = qst.denoise_pipeline(noisy, cfg)
    assert qst.psnr_db(sig, den) > qst.psnr_db(sig, noisy) + 3.0


def test_project_reconstruct_and_tau():
    img = qst.make_image(32, 8)
    H = qst.build_hamiltonian(img, 5.0)
    basis = qst.eig_full(H).reversed()
    alpha = qst.project(basis, img)
    assert alpha.shape == (1024,)
    profile = qst.ThresholdProfile(3, 2.0)
    assert profile.tau(3) == 1.0
    assert profile.tau(4) == 0.5
    assert profile.tau(5) == 0.0
    full = qst.ThresholdProfile(1024, 1.0)
    rec = qst.reconstruct(basis, alpha, full, img)
    assert np.allclose(rec.to_numpy(), img.to_numpy(), atol=1e-7)


def test_baselines_run():
    sig = qst.make_signal(128, 6)
    noisy, _ = qst.corrupt(sig, qst.NoiseModel.Poisson, 15.0, 3)
    f = qst.fourier_denoise(noisy, s=16, rho=16.0)
    t = qst.tv_denoise(noisy, 8.0, 200)
    assert qst.psnr_db(sig, f) > qst.psnr_db(sig, noisy)
    assert qst.psnr_db(sig, t) > qst.psnr_db(sig, noisy)


def test_pipeline_error_carries_stage():
    sig = qst.make_signal(64, 1)
    bad = qst.PipelineConfig(ratio=-1.0, s=64)
    with pytest.raises(RuntimeError, match="assemble"):
        qst.denoise_pipeline(sig, bad)


def test_field_io_roundtrip(tmp_path):
    img = qst.make_image(32, 9)
    path = tmp_path / "img.csv"
    qst.save_field(img, path)
    back = qst.load_field(path)
    assert np.array_equal(back.to_numpy(), img.to_numpy())

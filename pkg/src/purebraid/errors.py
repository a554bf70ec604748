"""Exception types shared across the package."""


class CertificateError(RuntimeError):
    """An invariant the proof relies on failed; the certificate is falsified."""

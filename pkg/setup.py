from setuptools import find_packages, setup

setup(
    name='polyoideals',
    version='0.1.0',
    description='Polyomino ideals: Groebner bases, primality, Hilbert series and rook polynomials of collections of cells',
    author='Many',
    package_dir={"": "src"},
    packages=find_packages(where='src'),
    python_requires='>=3.9',
    install_requires=['numpy','numba','scipy','sympy','networkx','click','tqdm','rich'],
    extras_require={'test': ['pytest','hypothesis']},
    entry_points={'console_scripts': ['polyoideals=polyoideals.cli:main']}
)

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

setup(
   name='modlab',
   version='0.1.0',
   description='Decides injectivity-type properties of finite modules over poset-pattern algebras over GF(p) '
               'and machine-checks the structure theory of automorphism-invariant modules.',
   packages=['modlab', 'modlab.base', 'modlab.applications', 'modlab.applications.exporters', 'modlab.tests'],
   package_data={'modlab': ['testdata/*.ring', 'testdata/*.script']},
   install_requires=["numpy>=1.18.1", "PyYAML>=5.3", "pytest>=5.3.4", "hypothesis>=5.0"],
   scripts=['modlab_cli.py'],
   zip_safe=False,
)

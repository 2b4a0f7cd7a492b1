from setuptools import setup

setup(name='shoppath',
      version='1.0.0a0',
      description='Shortest path and shop scheduling combination problems',
      packages=['shoppath'],
      license='MIT',
      install_requires=['numpy',
                        'networkx>=3.0',
                        'pandas'],
      entry_points={'console_scripts': ['shoppath = shoppath.cli:main']},
      author='Tom Young')

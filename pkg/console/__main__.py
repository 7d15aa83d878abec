import os
import sys

import django


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    django.setup()
    from console.runner import run
    sys.exit(run())


if __name__ == '__main__':
    main()
